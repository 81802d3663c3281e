#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "ivalid/error_objective.hpp"
#include "ivalid/moore_skelboe.hpp"
#include "ivalid/oracle.hpp"
#include "ivalid/report.hpp"
#include "ivalid/scenario.hpp"

namespace ivalid {

struct ValidateOptions {
  std::function<void(const MsTraceEvent&)> on_iteration;
  /// Keep the final cover for dump_cover.
  bool keep_cover = false;
};

struct ValidationRun {
  ValidationReport report;
  MsResult ms;
  std::optional<OracleResult> oracle;
};

/// Minimizes f = -eps over X0 x E starting from the single-box cover
/// {X0 x E}, splitting parameter components only, then cross-checks the
/// resulting eps_high against the sampling oracle when one is configured.
ValidationRun run_validate(const ErrorObjective& objective, double delta,
                           std::size_t max_iterations,
                           const std::optional<OracleConfig>& oracle,
                           const ValidateOptions& options = {});

ValidationRun run_validate(const Scenario& scenario,
                           const ValidateOptions& options = {});

/// One CSV row per cover entry: lb_i,ub_i for every dimension, then
/// f_lb,f_ub. Always starts with the header row.
std::string cover_to_csv(std::span<const CoverEntry> cover, std::size_t dim);
void dump_cover(std::span<const CoverEntry> cover, std::size_t dim,
                const std::filesystem::path& path);

}  // namespace ivalid
