#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ivalid/error_objective.hpp"

namespace ivalid {

enum class SamplingMode { random, grid };

std::string_view to_string(SamplingMode mode);
SamplingMode parse_sampling_mode(std::string_view name);

struct OracleConfig {
  std::size_t samples = 100'000;
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::random;
};

/// Largest sampled error; a guaranteed lower bound on the true maximum error.
struct OracleResult {
  double max_observed = 0.0;
  std::vector<double> argmax_x;
  std::vector<double> argmax_e;
  std::size_t samples_used = 0;
};

/// Evaluates the error at sampled points of X0 x E and keeps the largest.
/// Each sample is scored by the lower end of error_box on the degenerate box
/// {x} x {e}, which never exceeds the exact error there and agrees with
/// error_point up to rounding. Samples whose float error_point is below the
/// running maximum are not scored, so the result stays a lower bound.
///
/// random: `samples` points drawn uniformly, coordinates in order x then e,
/// from UniformSampler(seed); a larger sample count extends the same
/// sequence. grid: k points per axis with k = max(2, floor(samples^(1/d))),
/// endpoints included, so every corner of X0 x E is evaluated.
OracleResult sample_max_error(const ErrorObjective& objective,
                              const OracleConfig& config);

/// True iff the sampled maximum does not exceed the reported upper bound
/// (one ulp of slack). False means the upper bound is unsound.
bool certify(double report_upper, const OracleResult& oracle);

}  // namespace ivalid
