#include "ivalid/training.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ivalid/random.hpp"
#include "json.hpp"
#include "json_util.hpp"

namespace ivalid {

using nlohmann::json;

TrainingJob parse_training_job(std::string_view text) {
  try {
    const json doc = json::parse(text);
    TrainingJob job;
    for (const auto& p : doc.at("landmarks")) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("landmarks: expected [x, y]");
      job.landmarks.push_back({detail::finite_number(p[0], "landmarks"),
                               detail::finite_number(p[1], "landmarks")});
    }
    job.param_box = detail::parse_box(doc.at("param_box"), "param_box");
    job.noise_box = detail::parse_box(doc.at("noise_box"), "noise_box");
    if (doc.contains("samples")) job.samples = detail::count(doc["samples"], "samples");
    if (doc.contains("seed")) job.seed = detail::count(doc["seed"], "seed");
    auto& t = job.train;
    t.architecture.clear();
    for (const auto& a : doc.at("architecture")) t.architecture.push_back(detail::count(a, "architecture"));
    if (doc.contains("output_activation")) {
      t.output_activation = parse_activation(doc["output_activation"].get<std::string>());
    }
    if (doc.contains("epochs")) t.epochs = detail::count(doc["epochs"], "epochs");
    if (doc.contains("rate")) t.rate = detail::finite_number(doc["rate"], "rate");
    if (doc.contains("normalize")) t.normalize = doc["normalize"].get<bool>();
    t.seed = job.seed;
    std::ostringstream desc;
    desc << job.samples << " trilateration samples, x uniform in " << job.param_box
         << ", noise uniform in " << job.noise_box;
    t.trained_on = desc.str();
    if (job.param_box.dim() != 2) throw std::invalid_argument("param_box must be 2-D");
    if (job.noise_box.dim() != job.landmarks.size()) {
      throw std::invalid_argument("noise_box and landmarks disagree in dimension");
    }
    return job;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed training config: ") + e.what());
  }
}

TrainingJob load_training_job(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open training config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_training_job(buf.str());
}

TrainingSet make_training_set(const TrainingJob& job) {
  const TrilaterationModel model(job.landmarks);
  UniformSampler rng(job.seed);
  TrainingSet set;
  set.inputs.reserve(job.samples);
  set.targets.reserve(job.samples);
  for (std::size_t s = 0; s < job.samples; ++s) {
    std::vector<double> x = {rng.uniform(job.param_box[0].lb(), job.param_box[0].ub()),
                             rng.uniform(job.param_box[1].lb(), job.param_box[1].ub())};
    std::vector<double> y = model.eval_point(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += rng.uniform(job.noise_box[i].lb(), job.noise_box[i].ub());
    }
    set.inputs.push_back(std::move(y));
    set.targets.push_back(std::move(x));
  }
  return set;
}

}  // namespace ivalid
