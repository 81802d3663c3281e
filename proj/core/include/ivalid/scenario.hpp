#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivalid/error_objective.hpp"
#include "ivalid/estimators/gradient_descent.hpp"
#include "ivalid/estimators/trilateration.hpp"
#include "ivalid/oracle.hpp"

namespace ivalid {

/// Invalid or inconsistent scenario file.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ObservationSpec {
  enum class Kind { identity, trilateration };
  Kind kind = Kind::identity;
  std::vector<Point2> landmarks;
};

struct EstimatorSpec {
  enum class Kind {
    identity,
    constant,
    mlp,
    gradient_descent,
    /// Identity whose interval evaluation collapses to the midpoint. Only
    /// useful for exercising the certification-failure path.
    test_unsound,
  };
  Kind kind = Kind::identity;
  std::vector<double> value;              // constant
  std::filesystem::path weights_path;     // mlp, resolved
  std::size_t gd_iterations = 50;         // gradient_descent
  double gd_step = 0.01;
  std::optional<Point2> gd_init;          // defaults to the midpoint of X0
};

/// A complete validation problem.
///
/// File format (JSON):
///   {"param_box": [[lb, ub], ...], "noise_box": [[lb, ub], ...],
///    "observation": {"type": "identity"} | {"type": "trilateration",
///                    "landmarks": [[x, y], ...]},
///    "estimator": {"type": "identity"} | {"type": "constant", "value": [...]}
///               | {"type": "mlp", "weights_path": "..."}
///               | {"type": "gradient_descent", "iterations": 50,
///                  "step": 0.01, "init": [x, y]},
///    "ms": {"delta": 1e-3, "max_iterations": 1000000,
///           "inclusion": "mean_value" | "natural", "noise_splits": 1},
///    "oracle": {"samples": 100000, "seed": 0, "mode": "random" | "grid"}
///              | null}
/// A relative weights_path is resolved against the scenario file's folder.
struct Scenario {
  IntervalBox param_box;
  IntervalBox noise_box;
  ObservationSpec observation;
  EstimatorSpec estimator;
  double delta = 1e-3;
  std::size_t max_iterations = 1'000'000;
  InclusionForm inclusion = InclusionForm::mean_value;
  std::size_t noise_splits = 1;
  /// nullopt disables the oracle.
  std::optional<OracleConfig> oracle = OracleConfig{};
};

Scenario parse_scenario(std::string_view text,
                        const std::filesystem::path& base_dir = {});
Scenario load_scenario(const std::filesystem::path& path);

/// Assembles models and the error objective. Every dimension is checked
/// before anything is evaluated; errors name the mismatched pair.
ErrorObjective build_objective(const Scenario& scenario);

}  // namespace ivalid
