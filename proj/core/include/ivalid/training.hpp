#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string_view>

#include "ivalid/estimators/mlp.hpp"
#include "ivalid/estimators/trilateration.hpp"

namespace ivalid {

/// Offline fixture generation for the trilateration network.
///
/// Config file (JSON):
///   {"landmarks": [[x, y], ...], "param_box": [[lb, ub], [lb, ub]],
///    "noise_box": [[lb, ub], ...], "samples": 10000, "seed": 0,
///    "architecture": [3, 32, 32, 2], "output_activation": "relu",
///    "epochs": 2000, "rate": 0.05}
struct TrainingJob {
  std::vector<Point2> landmarks;
  IntervalBox param_box{Interval()};
  IntervalBox noise_box{Interval()};
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  TrainConfig train;
};

TrainingJob parse_training_job(std::string_view text);
TrainingJob load_training_job(const std::filesystem::path& path);

/// x uniform in param_box, e uniform in noise_box, input g(x) + e, target x.
TrainingSet make_training_set(const TrainingJob& job);

}  // namespace ivalid
