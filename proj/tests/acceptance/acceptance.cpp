// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "directed.hpp"
#include "ivalid/estimators/basic.hpp"
#include "ivalid/estimators/gradient_descent.hpp"
#include "ivalid/estimators/mlp.hpp"
#include "ivalid/moore_skelboe.hpp"
#include "ivalid/report.hpp"
#include "ivalid/scenario.hpp"
#include "ivalid/validate.hpp"
#include "models.hpp"
#include "samplers.hpp"

using namespace ivalid;
using ivalid::testing::Bracket;

namespace {

// Tolerances and budgets.
constexpr std::size_t kOpTrials = 10'000;
constexpr double kOpBudget = 5.0;
constexpr double kMsDelta = 1e-9;
constexpr double kMsBudget = 1.0;
constexpr double kIdentitySlack = 1e-4;
constexpr double kIdentityBudget = 10.0;
constexpr double kRangeBudget = 300.0;
constexpr std::size_t kCapIterations = 100;
constexpr int kRandomModels = 20;
constexpr int kRandomInputs = 1000;

const std::filesystem::path kData = IVALID_DATA_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void verdict(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void note(const std::string& s) {
  std::printf("  %s\n", s.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool encloses(const Interval& z, const Bracket& b) { return z.lb() <= b.down && b.up <= z.ub(); }

// 1. Fundamental inclusion of the elementary operations.
void interval_soundness() {
  const auto start = Clock::now();
  ivalid::testing::IntervalSampler s(20240611);
  struct Op {
    const char* name;
    std::function<bool()> trial;
  };
  const std::vector<Op> ops = {
      {"add", [&] {
         const Interval x = s.interval(), y = s.interval();
         return encloses(x + y, ivalid::testing::add_directed(s.member(x), s.member(y)));
       }},
      {"sub", [&] {
         const Interval x = s.interval(), y = s.interval();
         return encloses(x - y, ivalid::testing::sub_directed(s.member(x), s.member(y)));
       }},
      {"mul", [&] {
         const Interval x = s.interval(), y = s.interval();
         return encloses(x * y, ivalid::testing::mul_directed(s.member(x), s.member(y)));
       }},
      {"sqr", [&] {
         const Interval x = s.interval();
         const double v = s.member(x);
         return encloses(sqr(x), ivalid::testing::mul_directed(v, v));
       }},
      {"sqrt", [&] {
         const Interval x = s.nonnegative();
         return encloses(sqrt(x), ivalid::testing::sqrt_directed(s.member(x)));
       }},
      {"relu", [&] {
         const Interval x = s.interval();
         const double v = std::fmax(0.0, s.member(x));
         return relu(x).contains(v);
       }},
  };
  std::string detail;
  std::size_t violations = 0;
  for (const auto& op : ops) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < kOpTrials; ++i) bad += op.trial() ? 0 : 1;
    violations += bad;
    detail += fmt("%s %zu/%zu  ", op.name, bad, kOpTrials);
  }
  const double t = seconds_since(start);
  verdict(1, violations == 0 && t < kOpBudget,
          fmt("violations: %s(%.2f s, budget %.0f s)", detail.c_str(), t, kOpBudget));
}

// 2. Moore-Skelboe on objectives with a known minimum of 0.
void ms_analytic() {
  struct Case {
    const char* name;
    BoxObjective f;
    IntervalBox box;
    std::vector<std::size_t> dims;
  };
  const std::vector<Case> cases = {
      {"isqr on [-5, 4]", [](const IntervalBox& b) { return sqr(b[0]); },
       IntervalBox{Interval(-5, 4)}, {0}},
      {"paraboloid on [-5, 5]^2",
       [](const IntervalBox& b) { return sqr(b[0] - 1.0) + sqr(b[1] + 2.0); },
       IntervalBox{Interval(-5, 5), Interval(-5, 5)}, {0, 1}},
  };
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto start = Clock::now();
    const MsResult r = moore_skelboe(c.f, c.box, {kMsDelta, 1'000'000, c.dims});
    const double t = seconds_since(start);
    const bool ok = r.enclosure.contains(0.0) && r.enclosure.width() <= kMsDelta && r.converged &&
                    t < kMsBudget;
    pass = pass && ok;
    detail += fmt("%s: [%.3g, %.3g] width %.3g, %zu iterations, %.3f s; ", c.name,
                  r.enclosure.lb(), r.enclosure.ub(), r.enclosure.width(), r.iterations, t);
  }
  verdict(2, pass, detail + fmt("delta %.0e, budget %.0f s each", kMsDelta, kMsBudget));
}

struct Run {
  std::string name;
  ValidationRun run;
  double seconds;
  IntervalBox noise_box;
  std::shared_ptr<ErrorObjective> objective;
};

Run validate_scenario(const std::string& name, const Scenario& s) {
  auto objective = std::make_shared<ErrorObjective>(build_objective(s));
  const auto start = Clock::now();
  ValidationRun run = run_validate(*objective, s.delta, s.max_iterations, s.oracle);
  return {name, std::move(run), seconds_since(start), s.noise_box, objective};
}

// 3. Identity scenario against the analytic maximum sqrt(0.1^2 + 0.1^2).
Run identity_exactness() {
  Scenario s = load_scenario(kData / "identity.json");
  s.delta = 1e-4;
  Run r = validate_scenario("identity", s);
  // Bracket the exact maximum for the double nearest 0.1.
  const Bracket sq = ivalid::testing::mul_directed(0.1, 0.1);
  const Bracket lo = ivalid::testing::sqrt_directed(ivalid::testing::add_directed(sq.down, sq.down).down);
  const Bracket hi = ivalid::testing::sqrt_directed(ivalid::testing::add_directed(sq.up, sq.up).up);
  const ValidationReport& rep = r.run.report;
  const bool pass = rep.eps_high >= lo.down && rep.eps_high <= hi.up + kIdentitySlack &&
                    rep.eps_low <= hi.up && r.seconds < kIdentityBudget;
  verdict(3, pass,
          fmt("eps in [%.17g, %.17g], exact max in [%.17g, %.17g], converged %d, %.2f s "
              "(budget %.0f s)",
              rep.eps_low, rep.eps_high, lo.down, hi.up, rep.converged, r.seconds,
              kIdentityBudget));
  return r;
}

// 4. The trilateration scenarios, each run twice for criterion 8.
std::vector<Run> range_soundness() {
  std::vector<Run> runs;
  bool pass = true;
  std::string detail;
  for (const char* file : {"range_gd.json", "range_mlp.json"}) {
    const Scenario s = load_scenario(kData / file);
    for (int rep = 0; rep < 2; ++rep) {
      Run r = validate_scenario(file, s);
      const ValidationReport& v = r.run.report;
      const bool ok = v.certified && (!v.converged || v.eps_high - v.eps_low <= v.delta) &&
                      r.seconds < kRangeBudget;
      pass = pass && ok;
      if (rep == 0) {
        detail += fmt("%s: eps in [%.6g, %.6g], oracle %.6g, certified %d, converged %d "
                      "(%zu iterations), %.1f s; ",
                      file, v.eps_low, v.eps_high, *v.oracle_max, v.certified, v.converged,
                      v.iterations, r.seconds);
      } else if (!ok) {
        detail += fmt("%s repeat failed; ", file);
      }
      runs.push_back(std::move(r));
    }
  }
  verdict(4, pass, detail + fmt("delta 1e-2, budget %.0f s each", kRangeBudget));
  note("info: the published MLP bound of 1.7 used unpublished weights; order of magnitude only");
  return runs;
}

bool same_bits(const IntervalBox& a, const IntervalBox& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i].lb()) != std::bit_cast<std::uint64_t>(b[i].lb()) ||
        std::bit_cast<std::uint64_t>(a[i].ub()) != std::bit_cast<std::uint64_t>(b[i].ub())) {
      return false;
    }
  }
  return true;
}

Scenario inline_scenario(const std::string& text) { return parse_scenario(text, kData); }

// 5. Witness semantics over every converged run of this binary.
void witness_semantics(const std::vector<const Run*>& earlier) {
  std::vector<Run> extra;
  extra.push_back(validate_scenario(
      "constant estimator, point noise",
      inline_scenario(R"({"param_box": [[3, 4], [3, 4]], "noise_box": [[0, 0], [0, 0]],
          "observation": {"type": "identity"},
          "estimator": {"type": "constant", "value": [0, 0]},
          "ms": {"delta": 1e-6, "max_iterations": 100000}, "oracle": null})")));
  extra.push_back(validate_scenario(
      "identity, point noise",
      inline_scenario(R"({"param_box": [[0, 1], [0, 1]], "noise_box": [[0, 0], [0, 0]],
          "observation": {"type": "identity"}, "estimator": {"type": "identity"},
          "ms": {"delta": 1e-6, "max_iterations": 100000}, "oracle": null})")));

  std::vector<const Run*> runs = earlier;
  for (const auto& r : extra) runs.push_back(&r);

  bool pass = true;
  std::size_t converged = 0;
  for (const Run* r : runs) {
    const ValidationReport& v = r->run.report;
    if (!v.converged) continue;
    ++converged;
    const bool noise_exact = same_bits(v.witness_noise_box, r->noise_box);
    const std::vector<double> x = v.witness_param_box.midpoint();
    const std::vector<double> e = v.witness_noise_box.midpoint();
    const double err = r->objective->error_point(x, e);
    const bool in_range = err >= v.eps_low - v.delta && err <= v.eps_high;
    pass = pass && noise_exact && in_range;
    note(fmt("%s: noise components bit-exact %d, error at witness midpoint %.17g, "
             "required [%.17g, %.17g] -> %s",
             r->name.c_str(), noise_exact, err, v.eps_low - v.delta, v.eps_high,
             noise_exact && in_range ? "ok" : "violated"));
  }
  pass = pass && converged > 0;
  verdict(5, pass, fmt("%zu converged runs checked", converged));
}

// 6. Inclusion of the estimators on random models and inputs.
void estimator_inclusion() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_box = [&](const IntervalBox& outer) {
    std::vector<Interval> c;
    for (const auto& o : outer) {
      double a = o.lb() + unit(rng) * (o.ub() - o.lb());
      double b = o.lb() + unit(rng) * (o.ub() - o.lb());
      if (a > b) std::swap(a, b);
      c.emplace_back(a, b);
    }
    return IntervalBox(std::move(c));
  };
  auto random_point = [&](const IntervalBox& b) {
    std::vector<double> p;
    for (const auto& c : b) p.push_back(std::fmin(c.lb() + unit(rng) * (c.ub() - c.lb()), c.ub()));
    return p;
  };

  std::size_t mlp_bad = 0;
  const IntervalBox mlp_domain{Interval(-5, 5), Interval(-5, 5), Interval(-5, 5)};
  for (int m = 0; m < kRandomModels; ++m) {
    const MlpEstimator est(std::make_shared<MlpModel>(ivalid::testing::random_mlp(rng, 3, 2)));
    for (int i = 0; i < kRandomInputs; ++i) {
      const IntervalBox Y = random_box(mlp_domain);
      if (!est.eval_box(Y).contains(est.eval_point(random_point(Y)))) ++mlp_bad;
    }
  }

  std::size_t gd_bad = 0;
  const auto g = ivalid::testing::range_trilateration();
  const IntervalBox obs_domain = g->eval_box(ivalid::testing::range_param_box()) +
                                 ivalid::testing::range_noise_box();
  std::uniform_int_distribution<std::size_t> iters(1, 60);
  for (int m = 0; m < kRandomModels; ++m) {
    const GradientDescentConfig cfg{iters(rng), 0.001 + 0.019 * unit(rng),
                                    {5 + 20 * unit(rng), 5 + 20 * unit(rng)}};
    const GradientDescentEstimator est(g, cfg);
    for (int i = 0; i < kRandomInputs; ++i) {
      // Narrow boxes keep the enclosures informative.
      const std::vector<double> c = random_point(obs_domain);
      std::vector<Interval> comps;
      for (double v : c) comps.emplace_back(v - 0.5 * unit(rng), v + 0.5 * unit(rng));
      const IntervalBox Y(std::move(comps));
      if (!est.eval_box(Y).contains(est.eval_point(random_point(Y)))) ++gd_bad;
    }
  }
  verdict(6, mlp_bad == 0 && gd_bad == 0,
          fmt("mlp_box violations %zu, gd_box violations %zu (%d models x %d inputs each)",
              mlp_bad, gd_bad, kRandomModels, kRandomInputs));
}

// 7. Soundness at an iteration cap.
void iteration_cap() {
  bool pass = true;
  std::string detail;
  for (const char* file : {"range_gd.json", "range_mlp.json"}) {
    Scenario s = load_scenario(kData / file);
    s.max_iterations = kCapIterations;
    const Run r = validate_scenario(file, s);
    const ValidationReport& v = r.run.report;
    pass = pass && !v.converged && v.certified;
    detail += fmt("%s: eps_high %.6g, oracle %.6g, converged %d, certified %d; ", file,
                  v.eps_high, *v.oracle_max, v.converged, v.certified);
  }
  verdict(7, pass, detail + fmt("max_iterations %zu", kCapIterations));
}

// 8. Repeated runs give identical reports apart from the elapsed time.
void determinism(const std::vector<Run>& runs) {
  bool pass = runs.size() % 2 == 0 && !runs.empty();
  std::string detail;
  for (std::size_t i = 0; i + 1 < runs.size(); i += 2) {
    ValidationReport a = runs[i].run.report;
    ValidationReport b = runs[i + 1].run.report;
    a.elapsed_seconds = 0.0;
    b.elapsed_seconds = 0.0;
    const bool same = report_to_json(a) == report_to_json(b);
    pass = pass && same;
    detail += fmt("%s %s; ", runs[i].name.c_str(), same ? "identical" : "DIFFERENT");
  }
  verdict(8, pass, detail);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  try {
    interval_soundness();
    ms_analytic();
    const Run identity = identity_exactness();
    const std::vector<Run> range_runs = range_soundness();
    std::vector<const Run*> converged_candidates{&identity};
    for (const auto& r : range_runs) converged_candidates.push_back(&r);
    witness_semantics(converged_candidates);
    estimator_inclusion();
    iteration_cap();
    determinism(range_runs);
  } catch (const std::exception& e) {
    std::printf("aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d criteria failed, total %.1f s\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
