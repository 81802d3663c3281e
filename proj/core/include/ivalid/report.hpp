#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ivalid/error_objective.hpp"
#include "ivalid/interval_box.hpp"

namespace ivalid {

/// Outcome of one validation run.
///
/// [eps_low, eps_high] = [-rb(f(B0)), -lb(f(B0))] encloses the maximum
/// error; eps_high is the guaranteed (pessimistic) bound.
struct ValidationReport {
  double eps_low = 0.0;
  double eps_high = 0.0;
  double delta = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  std::size_t cover_size = 0;
  IntervalBox witness_param_box{Interval()};
  IntervalBox witness_noise_box{Interval()};
  InclusionForm inclusion = InclusionForm::mean_value;
  std::size_t noise_splits = 1;
  std::optional<double> oracle_max;
  /// oracle_max <= eps_high (+1 ulp); false when no oracle ran.
  bool certified = false;
  double elapsed_seconds = 0.0;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// JSON document with one key per field; numbers round-trip exactly.
std::string report_to_json(const ValidationReport& report);
/// Throws std::invalid_argument on malformed documents.
ValidationReport report_from_json(std::string_view text);

void write_report(const ValidationReport& report, const std::filesystem::path& path);

}  // namespace ivalid
