#include "ivalid/estimators/mlp.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ivalid {

using nlohmann::json;

std::string_view to_string(Activation a) {
  return a == Activation::relu ? "relu" : "linear";
}

Activation parse_activation(std::string_view name) {
  if (name == "relu") return Activation::relu;
  if (name == "linear") return Activation::linear;
  throw MlpError("unknown activation '" + std::string(name) + "'");
}

namespace {

std::string layer_tag(std::size_t i) { return "layer " + std::to_string(i); }

// Each layer is an affine map with point weights, so every component of the
// enclosure (the value and each partial) goes through affine_dot.
std::vector<Interval> forward_box(const std::vector<DenseLayer>& layers,
                                  std::vector<Interval> in) {
  for (const auto& layer : layers) {
    std::vector<Interval> out;
    out.reserve(layer.rows);
    for (std::size_t r = 0; r < layer.rows; ++r) {
      const std::span<const double> w(&layer.weights[r * layer.cols], layer.cols);
      const Interval z = affine_dot(w, in, layer.bias[r]);
      out.push_back(layer.activation == Activation::relu ? relu(z) : z);
    }
    in = std::move(out);
  }
  return in;
}

std::vector<IntervalJet> forward_jet(const std::vector<DenseLayer>& layers,
                                     std::vector<IntervalJet> in, std::size_t tangents) {
  std::vector<Interval> values;
  std::vector<std::vector<Interval>> partials(tangents);
  std::vector<Interval> grads(tangents);
  for (const auto& layer : layers) {
    values.clear();
    for (auto& p : partials) p.clear();
    for (const auto& j : in) {
      values.push_back(j.value());
      for (std::size_t i = 0; i < tangents; ++i) {
        partials[i].push_back(i < j.tangents() ? j.grad(i) : Interval());
      }
    }
    std::vector<IntervalJet> out;
    out.reserve(layer.rows);
    for (std::size_t r = 0; r < layer.rows; ++r) {
      const std::span<const double> w(&layer.weights[r * layer.cols], layer.cols);
      for (std::size_t i = 0; i < tangents; ++i) grads[i] = affine_dot(w, partials[i], 0.0);
      const IntervalJet z = IntervalJet::from_parts(affine_dot(w, values, layer.bias[r]), grads);
      out.push_back(layer.activation == Activation::relu ? relu(z) : z);
    }
    in = std::move(out);
  }
  return in;
}

void check_input(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw std::invalid_argument("mlp: expected input of dimension " +
                                std::to_string(expected) + ", got " +
                                std::to_string(actual));
  }
}

}  // namespace

MlpModel::MlpModel(std::vector<DenseLayer> layers, MlpMeta meta)
    : layers_(std::move(layers)), meta_(std::move(meta)) {
  if (layers_.empty()) throw MlpError("network has no layers");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto& l = layers_[i];
    if (l.rows == 0 || l.cols == 0) throw MlpError(layer_tag(i) + ": empty weight matrix");
    if (l.weights.size() != l.rows * l.cols) {
      throw MlpError(layer_tag(i) + ": weight count does not match " +
                     std::to_string(l.rows) + "x" + std::to_string(l.cols));
    }
    if (l.bias.size() != l.rows) {
      throw MlpError(layer_tag(i) + ": bias length " + std::to_string(l.bias.size()) +
                     " does not match " + std::to_string(l.rows) + " rows");
    }
    if (i > 0 && l.cols != layers_[i - 1].rows) {
      throw MlpError(layer_tag(i) + ": expects " + std::to_string(l.cols) +
                     " inputs but previous layer has " +
                     std::to_string(layers_[i - 1].rows) + " outputs");
    }
    for (double w : l.weights) {
      if (!std::isfinite(w)) throw MlpError(layer_tag(i) + ": non-finite weight");
    }
    for (double b : l.bias) {
      if (!std::isfinite(b)) throw MlpError(layer_tag(i) + ": non-finite bias");
    }
  }
}

std::vector<double> MlpModel::forward(std::span<const double> y) const {
  check_input(input_dim(), y.size());
  std::vector<double> in(y.begin(), y.end());
  for (const auto& layer : layers_) {
    std::vector<double> out(layer.rows);
    for (std::size_t r = 0; r < layer.rows; ++r) {
      double acc = layer.bias[r];
      for (std::size_t c = 0; c < layer.cols; ++c) acc += layer.weight(r, c) * in[c];
      out[r] = layer.activation == Activation::relu ? std::max(0.0, acc) : acc;
    }
    in = std::move(out);
  }
  return in;
}

IntervalBox MlpModel::forward(const IntervalBox& y) const {
  check_input(input_dim(), y.dim());
  return IntervalBox(forward_box(layers_, y.components()));
}

std::vector<IntervalJet> MlpModel::forward(std::span<const IntervalJet> y) const {
  check_input(input_dim(), y.size());
  std::size_t tangents = 0;
  for (const auto& j : y) tangents = std::max(tangents, j.tangents());
  return forward_jet(layers_, std::vector<IntervalJet>(y.begin(), y.end()), tangents);
}

// --- file format -----------------------------------------------------------

namespace {

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) throw MlpError(where + " is not a finite number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw MlpError(where + " is not a finite number");
  return d;
}

DenseLayer parse_layer(const json& j, std::size_t index) {
  const std::string tag = layer_tag(index);
  if (!j.is_object()) throw MlpError(tag + ": expected an object");
  if (!j.contains("weights") || !j["weights"].is_array() || j["weights"].empty()) {
    throw MlpError(tag + ": missing or empty \"weights\"");
  }
  if (!j.contains("bias") || !j["bias"].is_array()) {
    throw MlpError(tag + ": missing \"bias\"");
  }
  DenseLayer layer;
  const json& w = j["weights"];
  layer.rows = w.size();
  for (std::size_t r = 0; r < w.size(); ++r) {
    if (!w[r].is_array()) throw MlpError(tag + ": weight row " + std::to_string(r) + " is not an array");
    if (r == 0) layer.cols = w[r].size();
    if (w[r].size() != layer.cols) {
      throw MlpError(tag + ": weight row " + std::to_string(r) + " has " +
                     std::to_string(w[r].size()) + " entries, expected " +
                     std::to_string(layer.cols));
    }
    for (std::size_t c = 0; c < w[r].size(); ++c) {
      layer.weights.push_back(number_at(
          w[r][c], tag + ": weight [" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
  }
  const json& b = j["bias"];
  for (std::size_t r = 0; r < b.size(); ++r) {
    layer.bias.push_back(number_at(b[r], tag + ": bias [" + std::to_string(r) + "]"));
  }
  const std::string act = j.value("activation", std::string("relu"));
  try {
    layer.activation = parse_activation(act);
  } catch (const MlpError& e) {
    throw MlpError(tag + ": " + e.what());
  }
  return layer;
}

}  // namespace

MlpModel mlp_from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MlpError(std::string("malformed weight file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("layers") || !doc["layers"].is_array()) {
    throw MlpError("weight file needs a \"layers\" array");
  }
  std::vector<DenseLayer> layers;
  for (std::size_t i = 0; i < doc["layers"].size(); ++i) {
    layers.push_back(parse_layer(doc["layers"][i], i));
  }
  MlpMeta meta;
  if (doc.contains("meta") && doc["meta"].is_object()) {
    const json& m = doc["meta"];
    if (m.contains("seed") && m["seed"].is_number_unsigned()) meta.seed = m["seed"].get<std::uint64_t>();
    if (m.contains("trained_on") && m["trained_on"].is_string()) {
      meta.trained_on = m["trained_on"].get<std::string>();
    }
  }
  return MlpModel(std::move(layers), std::move(meta));
}

std::string mlp_to_json_text(const MlpModel& model) {
  json layers = json::array();
  for (const auto& l : model.layers()) {
    json rows = json::array();
    for (std::size_t r = 0; r < l.rows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < l.cols; ++c) row.push_back(l.weight(r, c));
      rows.push_back(std::move(row));
    }
    layers.push_back({{"weights", std::move(rows)},
                      {"bias", l.bias},
                      {"activation", std::string(to_string(l.activation))}});
  }
  json meta = json::object();
  if (model.meta().seed) meta["seed"] = *model.meta().seed;
  meta["trained_on"] = model.meta().trained_on;
  json doc = {{"layers", std::move(layers)}, {"meta", std::move(meta)}};
  return doc.dump(1) + "\n";
}

MlpModel mlp_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MlpError("cannot open weight file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return mlp_from_json_text(buf.str());
  } catch (const MlpError& e) {
    throw MlpError(path.string() + ": " + e.what());
  }
}

void mlp_save(const MlpModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw MlpError("cannot write weight file " + path.string());
  out << mlp_to_json_text(model);
  if (!out) throw MlpError("failed writing weight file " + path.string());
}

// --- estimator adapter -----------------------------------------------------

MlpEstimator::MlpEstimator(std::shared_ptr<const MlpModel> model)
    : model_(std::move(model)) {
  if (!model_) throw std::invalid_argument("MlpEstimator: null model");
}

std::vector<double> MlpEstimator::eval_point(std::span<const double> y) const {
  return model_->forward(y);
}

IntervalBox MlpEstimator::eval_box(const IntervalBox& y) const {
  return model_->forward(y);
}

std::optional<std::vector<IntervalJet>> MlpEstimator::eval_jet(
    std::span<const IntervalJet> y) const {
  return model_->forward(y);
}

}  // namespace ivalid
