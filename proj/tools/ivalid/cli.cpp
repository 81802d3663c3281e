#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "ivalid/estimators/mlp.hpp"
#include "ivalid/oracle.hpp"
#include "ivalid/scenario.hpp"
#include "ivalid/training.hpp"
#include "ivalid/validate.hpp"

namespace ivalid::cli {

namespace {

struct ValidateArgs {
  std::string scenario;
  std::optional<double> delta;
  std::optional<std::size_t> max_iters;
  std::string output;
  std::string dump_cover;
  std::size_t progress = 0;
};

struct OracleArgs {
  std::string scenario;
  std::size_t samples = 100'000;
  std::uint64_t seed = 0;
  std::string mode = "random";
};

struct TrainArgs {
  std::string config;
  std::string out;
  std::size_t log_every = 100;
};

int do_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  Scenario scenario = load_scenario(args.scenario);
  if (args.delta) {
    if (!(*args.delta > 0.0)) throw ScenarioError("--delta must be positive");
    scenario.delta = *args.delta;
  }
  if (args.max_iters) scenario.max_iterations = *args.max_iters;

  ValidateOptions options;
  options.keep_cover = !args.dump_cover.empty();
  if (args.progress > 0) {
    options.on_iteration = [&err, every = args.progress](const MsTraceEvent& e) {
      if (e.iteration % every == 0) {
        err << "iter " << e.iteration << "  front lb " << e.front_lb << "  cover "
            << e.cover_size << '\n';
      }
    };
  }

  const ValidationRun run = run_validate(scenario, options);
  const ValidationReport& r = run.report;

  out.precision(10);
  out << "max error enclosure: [" << r.eps_low << ", " << r.eps_high << "]\n"
      << "guaranteed bound:    " << r.eps_high << '\n'
      << "converged:           " << (r.converged ? "yes" : "no") << " (delta " << r.delta
      << ", " << r.iterations << " iterations, cover " << r.cover_size << ")\n"
      << "witness param box:   " << r.witness_param_box << '\n';
  if (r.oracle_max) {
    out << "oracle max:          " << *r.oracle_max << '\n'
        << "certified:           " << (r.certified ? "yes" : "NO") << '\n';
  }
  out << "elapsed:             " << r.elapsed_seconds << " s\n";

  if (!args.output.empty()) write_report(r, args.output);
  if (!args.dump_cover.empty()) {
    dump_cover(run.ms.final_cover, run.ms.witness.dim(), args.dump_cover);
  }
  if (r.oracle_max && !r.certified) {
    err << "certification failed: oracle observed " << *r.oracle_max
        << " above the reported bound " << r.eps_high << '\n';
    return kExitUncertified;
  }
  return kExitOk;
}

int do_oracle(const OracleArgs& args, std::ostream& out) {
  const Scenario scenario = load_scenario(args.scenario);
  const ErrorObjective objective = build_objective(scenario);
  const OracleConfig config{args.samples, args.seed, parse_sampling_mode(args.mode)};
  const OracleResult res = sample_max_error(objective, config);
  out.precision(17);
  out << "max observed error: " << res.max_observed << '\n' << "at x = (";
  for (std::size_t i = 0; i < res.argmax_x.size(); ++i) out << (i ? ", " : "") << res.argmax_x[i];
  out << "), e = (";
  for (std::size_t i = 0; i < res.argmax_e.size(); ++i) out << (i ? ", " : "") << res.argmax_e[i];
  out << ")\nsamples: " << res.samples_used << '\n';
  return kExitOk;
}

int do_train(const TrainArgs& args, std::ostream& out) {
  const TrainingJob job = load_training_job(args.config);
  const TrainingSet data = make_training_set(job);
  double first = 0.0;
  double last = 0.0;
  const MlpModel model = mlp_train(data, job.train, [&](std::size_t epoch, double loss) {
    if (epoch == 1) first = loss;
    last = loss;
    if (args.log_every > 0 && epoch % args.log_every == 0) {
      out << "epoch " << epoch << "  loss " << loss << '\n';
    }
  });
  mlp_save(model, args.out);
  out << "loss " << first << " -> " << last << "; weights written to " << args.out << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Guaranteed worst-case error bounds for nonlinear estimators"};
  app.require_subcommand(1);

  ValidateArgs vargs;
  auto* validate = app.add_subcommand("validate", "Bound the maximum estimation error");
  validate->add_option("--scenario", vargs.scenario, "Scenario file")->required();
  validate->add_option("--delta", vargs.delta, "Stopping width (overrides the scenario)");
  validate->add_option("--max-iters", vargs.max_iters, "Iteration cap (overrides the scenario)");
  validate->add_option("--output", vargs.output, "Write the report to this file");
  validate->add_option("--dump-cover", vargs.dump_cover, "Write the final cover as CSV");
  validate->add_option("--progress", vargs.progress, "Print a trace line every N iterations");

  OracleArgs oargs;
  auto* oracle = app.add_subcommand("oracle", "Sample the error to get a lower bound");
  oracle->add_option("--scenario", oargs.scenario, "Scenario file")->required();
  oracle->add_option("--samples", oargs.samples, "Number of samples")->required();
  oracle->add_option("--seed", oargs.seed, "Sampler seed")->required();
  oracle->add_option("--mode", oargs.mode, "random or grid");

  TrainArgs targs;
  auto* train = app.add_subcommand("train-mlp", "Train the fixture network offline");
  train->add_option("--config", targs.config, "Training config file")->required();
  train->add_option("--out", targs.out, "Output weight file")->required();
  train->add_option("--log-every", targs.log_every, "Print the loss every N epochs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*validate) return do_validate(vargs, out, err);
    if (*oracle) return do_oracle(oargs, out);
    if (*train) return do_train(targs, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ivalid::cli
