#include "ivalid/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ivalid/estimators/basic.hpp"
#include "ivalid/estimators/mlp.hpp"
#include "json.hpp"
#include "json_util.hpp"

namespace ivalid {

using nlohmann::json;

namespace {

Point2 parse_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ScenarioError(where + ": expected [x, y]");
  return {detail::finite_number(j[0], where), detail::finite_number(j[1], where)};
}

ObservationSpec parse_observation(const json& j) {
  if (!j.is_object() || !j.contains("type")) {
    throw ScenarioError("observation: expected an object with a \"type\"");
  }
  const std::string type = j["type"].get<std::string>();
  ObservationSpec spec;
  if (type == "identity") {
    spec.kind = ObservationSpec::Kind::identity;
  } else if (type == "trilateration") {
    spec.kind = ObservationSpec::Kind::trilateration;
    if (!j.contains("landmarks") || !j["landmarks"].is_array()) {
      throw ScenarioError("observation: trilateration needs \"landmarks\"");
    }
    for (std::size_t i = 0; i < j["landmarks"].size(); ++i) {
      spec.landmarks.push_back(
          parse_point(j["landmarks"][i], "observation.landmarks[" + std::to_string(i) + "]"));
    }
  } else {
    throw ScenarioError("observation: unknown type '" + type + "'");
  }
  return spec;
}

EstimatorSpec parse_estimator(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("type")) {
    throw ScenarioError("estimator: expected an object with a \"type\"");
  }
  const std::string type = j["type"].get<std::string>();
  EstimatorSpec spec;
  if (type == "identity") {
    spec.kind = EstimatorSpec::Kind::identity;
  } else if (type == "test_unsound") {
    spec.kind = EstimatorSpec::Kind::test_unsound;
  } else if (type == "constant") {
    spec.kind = EstimatorSpec::Kind::constant;
    if (!j.contains("value") || !j["value"].is_array()) {
      throw ScenarioError("estimator: constant needs a \"value\" array");
    }
    for (const auto& v : j["value"]) spec.value.push_back(detail::finite_number(v, "estimator.value"));
  } else if (type == "mlp") {
    spec.kind = EstimatorSpec::Kind::mlp;
    if (!j.contains("weights_path") || !j["weights_path"].is_string()) {
      throw ScenarioError("estimator: mlp needs \"weights_path\"");
    }
    std::filesystem::path p = j["weights_path"].get<std::string>();
    spec.weights_path = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  } else if (type == "gradient_descent") {
    spec.kind = EstimatorSpec::Kind::gradient_descent;
    if (j.contains("iterations")) spec.gd_iterations = detail::count(j["iterations"], "estimator.iterations");
    if (j.contains("step")) spec.gd_step = detail::finite_number(j["step"], "estimator.step");
    if (j.contains("init")) spec.gd_init = parse_point(j["init"], "estimator.init");
  } else {
    throw ScenarioError("estimator: unknown type '" + type + "'");
  }
  return spec;
}

}  // namespace

Scenario parse_scenario(std::string_view text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");
  for (const char* key : {"param_box", "noise_box", "observation", "estimator"}) {
    if (!doc.contains(key)) throw ScenarioError(std::string("scenario is missing \"") + key + "\"");
  }
  try {
    Scenario s{
        .param_box = detail::parse_box(doc["param_box"], "param_box"),
        .noise_box = detail::parse_box(doc["noise_box"], "noise_box"),
        .observation = parse_observation(doc["observation"]),
        .estimator = parse_estimator(doc["estimator"], base_dir),
    };
    if (doc.contains("ms")) {
      const json& ms = doc["ms"];
      if (ms.contains("delta")) s.delta = detail::finite_number(ms["delta"], "ms.delta");
      if (ms.contains("max_iterations")) {
        s.max_iterations = detail::count(ms["max_iterations"], "ms.max_iterations");
      }
      if (ms.contains("noise_splits")) {
        s.noise_splits = detail::count(ms["noise_splits"], "ms.noise_splits");
        if (s.noise_splits == 0) throw ScenarioError("ms.noise_splits must be >= 1");
      }
      if (ms.contains("inclusion")) {
        s.inclusion = parse_inclusion_form(ms["inclusion"].get<std::string>());
      }
    }
    if (!(s.delta > 0.0)) throw ScenarioError("ms.delta must be positive");
    if (doc.contains("oracle")) {
      const json& o = doc["oracle"];
      if (o.is_null() || (o.is_boolean() && !o.get<bool>())) {
        s.oracle.reset();
      } else if (o.is_object()) {
        OracleConfig cfg;
        if (o.contains("samples")) cfg.samples = detail::count(o["samples"], "oracle.samples");
        if (o.contains("seed")) cfg.seed = detail::count(o["seed"], "oracle.seed");
        if (o.contains("mode")) cfg.mode = parse_sampling_mode(o["mode"].get<std::string>());
        if (cfg.samples == 0) throw ScenarioError("oracle.samples must be >= 1");
        s.oracle = cfg;
      } else if (!o.is_boolean()) {
        throw ScenarioError("oracle: expected an object, null or false");
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario has a field of the wrong type: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str(), path.parent_path());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
}

namespace {

void require(std::size_t a, std::size_t b, const std::string& what) {
  if (a != b) {
    throw ScenarioError("dimension mismatch between " + what + " (" + std::to_string(a) +
                        " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

ErrorObjective build_objective(const Scenario& s) {
  const std::size_t n = s.param_box.dim();
  const std::size_t m = s.noise_box.dim();

  std::shared_ptr<const ObservationModel> observation;
  std::shared_ptr<const TrilaterationModel> trilateration;
  try {
    switch (s.observation.kind) {
      case ObservationSpec::Kind::identity:
        require(n, m, "param_box and noise_box (identity observation)");
        observation = std::make_shared<IdentityObservation>(n);
        break;
      case ObservationSpec::Kind::trilateration:
        require(n, 2, "param_box and trilateration position");
        require(m, s.observation.landmarks.size(), "noise_box and landmarks");
        trilateration = std::make_shared<TrilaterationModel>(s.observation.landmarks);
        observation = trilateration;
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(std::string("observation: ") + e.what());
  }

  std::shared_ptr<const EstimatorModel> estimator;
  try {
    switch (s.estimator.kind) {
      case EstimatorSpec::Kind::identity:
        require(n, m, "param_box and noise_box (identity estimator)");
        estimator = std::make_shared<IdentityEstimator>(m);
        break;
      case EstimatorSpec::Kind::test_unsound:
        require(n, m, "param_box and noise_box (test_unsound estimator)");
        estimator = std::make_shared<UnsoundMidpointEstimator>(m);
        break;
      case EstimatorSpec::Kind::constant:
        require(s.estimator.value.size(), n, "estimator value and param_box");
        estimator = std::make_shared<ConstantEstimator>(s.estimator.value, m);
        break;
      case EstimatorSpec::Kind::mlp: {
        auto model = std::make_shared<const MlpModel>(mlp_load(s.estimator.weights_path));
        require(model->input_dim(), m, "mlp input and noise_box");
        require(model->output_dim(), n, "mlp output and param_box");
        estimator = std::make_shared<MlpEstimator>(std::move(model));
        break;
      }
      case EstimatorSpec::Kind::gradient_descent: {
        if (!trilateration) {
          throw ScenarioError("gradient_descent estimator needs a trilateration observation");
        }
        GradientDescentConfig cfg{s.estimator.gd_iterations, s.estimator.gd_step,
                                  s.estimator.gd_init.value_or(
                                      Point2{s.param_box[0].mid(), s.param_box[1].mid()})};
        estimator = std::make_shared<GradientDescentEstimator>(trilateration, cfg);
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(std::string("estimator: ") + e.what());
  } catch (const MlpError& e) {
    throw ScenarioError(std::string("estimator: ") + e.what());
  }

  return ErrorObjective(std::move(observation), std::move(estimator), s.param_box,
                        s.noise_box, s.inclusion,
                        s.noise_splits);
}

}  // namespace ivalid
