#include "ivalid/validate.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <stdexcept>

namespace ivalid {

ValidationRun run_validate(const ErrorObjective& objective, double delta,
                           std::size_t max_iterations,
                           const std::optional<OracleConfig>& oracle,
                           const ValidateOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  const MsConfig config{delta, max_iterations, objective.split_dims()};
  MsOptions ms_options{options.on_iteration, options.keep_cover};
  ValidationRun run{.report = {},
                    .ms = moore_skelboe(
                        [&objective](const IntervalBox& b) { return objective.objective_box(b); },
                        objective.search_box(), config, ms_options),
                    .oracle = std::nullopt};

  ValidationReport& r = run.report;
  // f = -eps, so the enclosure of min f maps to [-ub, -lb] for max eps.
  r.eps_high = -run.ms.enclosure.lb();
  r.eps_low = -run.ms.enclosure.ub();
  r.delta = delta;
  r.converged = run.ms.converged;
  r.iterations = run.ms.iterations;
  r.cover_size = run.ms.final_cover_size;
  r.witness_param_box = run.ms.witness.slice(0, objective.param_dim());
  r.witness_noise_box = run.ms.witness.slice(objective.param_dim(), objective.noise_dim());
  r.inclusion = objective.form();
  r.noise_splits = objective.noise_splits();

  if (oracle) {
    run.oracle = sample_max_error(objective, *oracle);
    r.oracle_max = run.oracle->max_observed;
    r.certified = certify(r.eps_high, *run.oracle);
  }

  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

ValidationRun run_validate(const Scenario& scenario, const ValidateOptions& options) {
  const ErrorObjective objective = build_objective(scenario);
  return run_validate(objective, scenario.delta, scenario.max_iterations,
                      scenario.oracle, options);
}

namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

}  // namespace

std::string cover_to_csv(std::span<const CoverEntry> cover, std::size_t dim) {
  std::string out;
  for (std::size_t i = 0; i < dim; ++i) {
    out += "lb_" + std::to_string(i) + ",ub_" + std::to_string(i) + ",";
  }
  out += "f_lb,f_ub\n";
  for (const auto& entry : cover) {
    if (entry.box.dim() != dim) throw std::invalid_argument("cover entry dimension mismatch");
    for (const auto& c : entry.box) {
      append_number(out, c.lb());
      out += ',';
      append_number(out, c.ub());
      out += ',';
    }
    append_number(out, entry.enclosure.lb());
    out += ',';
    append_number(out, entry.enclosure.ub());
    out += '\n';
  }
  return out;
}

void dump_cover(std::span<const CoverEntry> cover, std::size_t dim,
                const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cover dump " + path.string());
  out << cover_to_csv(cover, dim);
  if (!out) throw std::runtime_error("failed writing cover dump " + path.string());
}

}  // namespace ivalid
