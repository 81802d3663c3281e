#include <algorithm>
#include <cmath>

#include "ivalid/estimators/mlp.hpp"
#include "ivalid/random.hpp"

namespace ivalid {

namespace {

void validate(const TrainingSet& data, const TrainConfig& config) {
  if (data.inputs.empty()) throw MlpError("training set is empty");
  if (data.inputs.size() != data.targets.size()) {
    throw MlpError("training set has mismatched input/target counts");
  }
  if (config.architecture.size() < 2) {
    throw MlpError("architecture needs at least input and output sizes");
  }
  if (std::find(config.architecture.begin(), config.architecture.end(), 0u) !=
      config.architecture.end()) {
    throw MlpError("architecture contains a zero-width layer");
  }
  if (config.epochs == 0) throw MlpError("epochs must be >= 1");
  if (!(config.rate > 0.0)) throw MlpError("rate must be positive");
  for (std::size_t s = 0; s < data.inputs.size(); ++s) {
    if (data.inputs[s].size() != config.architecture.front() ||
        data.targets[s].size() != config.architecture.back()) {
      throw MlpError("sample " + std::to_string(s) + " does not match the architecture");
    }
  }
}

struct Affine {
  std::vector<double> shift;
  std::vector<double> scale;
};

// Per-column standardization of inputs.
Affine input_transform(const TrainingSet& data, bool enabled) {
  const std::size_t d = data.inputs.front().size();
  Affine t{std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)};
  if (!enabled) return t;
  const double count = static_cast<double>(data.inputs.size());
  for (const auto& x : data.inputs) {
    for (std::size_t j = 0; j < d; ++j) t.shift[j] += x[j];
  }
  for (auto& m : t.shift) m /= count;
  std::vector<double> var(d, 0.0);
  for (const auto& x : data.inputs) {
    for (std::size_t j = 0; j < d; ++j) var[j] += (x[j] - t.shift[j]) * (x[j] - t.shift[j]);
  }
  for (std::size_t j = 0; j < d; ++j) {
    const double s = std::sqrt(var[j] / count);
    t.scale[j] = s > 0.0 ? s : 1.0;
  }
  return t;
}

// Targets are only scaled (no shift), which commutes with a relu output.
double target_scale(const TrainingSet& data, bool enabled) {
  if (!enabled) return 1.0;
  double m = 0.0;
  for (const auto& t : data.targets) {
    for (double v : t) m = std::max(m, std::fabs(v));
  }
  return m > 0.0 ? m : 1.0;
}

}  // namespace

MlpModel mlp_train(const TrainingSet& data, const TrainConfig& config,
                   const std::function<void(std::size_t, double)>& on_epoch) {
  validate(data, config);
  const auto& arch = config.architecture;
  const std::size_t n_layers = arch.size() - 1;

  const Affine in_t = input_transform(data, config.normalize);
  const double out_scale = target_scale(data, config.normalize);

  std::vector<std::vector<double>> xs(data.inputs.size());
  std::vector<std::vector<double>> ts(data.targets.size());
  for (std::size_t s = 0; s < xs.size(); ++s) {
    xs[s].resize(arch.front());
    for (std::size_t j = 0; j < arch.front(); ++j) {
      xs[s][j] = (data.inputs[s][j] - in_t.shift[j]) / in_t.scale[j];
    }
    ts[s].resize(arch.back());
    for (std::size_t j = 0; j < arch.back(); ++j) ts[s][j] = data.targets[s][j] / out_scale;
  }

  // Uniform He-style initialization; small positive biases keep relu units
  // alive at the start.
  UniformSampler rng(config.seed);
  std::vector<DenseLayer> layers(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) {
    auto& layer = layers[l];
    layer.cols = arch[l];
    layer.rows = arch[l + 1];
    layer.activation = l + 1 == n_layers ? config.output_activation
                                         : config.hidden_activation;
    const double limit = std::sqrt(6.0 / static_cast<double>(layer.cols));
    layer.weights.resize(layer.rows * layer.cols);
    for (auto& w : layer.weights) w = rng.uniform(-limit, limit);
    layer.bias.assign(layer.rows, 0.01);
  }

  const double inv_count = 1.0 / static_cast<double>(xs.size() * arch.back());
  std::vector<std::vector<double>> pre(n_layers), act(n_layers + 1), delta(n_layers);
  std::vector<std::vector<double>> grad_w(n_layers), grad_b(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) {
    pre[l].resize(layers[l].rows);
    act[l + 1].resize(layers[l].rows);
    delta[l].resize(layers[l].rows);
  }

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t l = 0; l < n_layers; ++l) {
      grad_w[l].assign(layers[l].weights.size(), 0.0);
      grad_b[l].assign(layers[l].rows, 0.0);
    }
    double loss = 0.0;
    for (std::size_t s = 0; s < xs.size(); ++s) {
      act[0] = xs[s];
      for (std::size_t l = 0; l < n_layers; ++l) {
        const auto& layer = layers[l];
        for (std::size_t r = 0; r < layer.rows; ++r) {
          double z = layer.bias[r];
          const double* w = &layer.weights[r * layer.cols];
          for (std::size_t c = 0; c < layer.cols; ++c) z += w[c] * act[l][c];
          pre[l][r] = z;
          act[l + 1][r] = layer.activation == Activation::relu ? std::max(0.0, z) : z;
        }
      }
      // Backward pass; delta holds dL/dz with L the mean squared error.
      for (std::size_t l = n_layers; l-- > 0;) {
        const auto& layer = layers[l];
        for (std::size_t r = 0; r < layer.rows; ++r) {
          double g;
          if (l + 1 == n_layers) {
            const double diff = act[l + 1][r] - ts[s][r];
            loss += diff * diff;
            g = 2.0 * diff * inv_count;
          } else {
            g = 0.0;
            const auto& next = layers[l + 1];
            for (std::size_t k = 0; k < next.rows; ++k) g += next.weight(k, r) * delta[l + 1][k];
          }
          if (layer.activation == Activation::relu && pre[l][r] <= 0.0) g = 0.0;
          delta[l][r] = g;
          grad_b[l][r] += g;
          double* gw = &grad_w[l][r * layer.cols];
          for (std::size_t c = 0; c < layer.cols; ++c) gw[c] += g * act[l][c];
        }
      }
    }
    loss *= inv_count;
    if (!std::isfinite(loss)) {
      throw MlpError("training diverged at epoch " + std::to_string(epoch + 1) +
                     "; try a smaller rate");
    }
    if (on_epoch) on_epoch(epoch + 1, loss);
    for (std::size_t l = 0; l < n_layers; ++l) {
      for (std::size_t i = 0; i < layers[l].weights.size(); ++i) {
        layers[l].weights[i] -= config.rate * grad_w[l][i];
      }
      for (std::size_t r = 0; r < layers[l].rows; ++r) {
        layers[l].bias[r] -= config.rate * grad_b[l][r];
      }
    }
  }

  // Fold the input standardization into the first layer and the target
  // scale into the last one.
  {
    auto& first = layers.front();
    for (std::size_t r = 0; r < first.rows; ++r) {
      double shift = 0.0;
      for (std::size_t c = 0; c < first.cols; ++c) {
        double& w = first.weights[r * first.cols + c];
        w /= in_t.scale[c];
        shift += w * in_t.shift[c];
      }
      first.bias[r] -= shift;
    }
    auto& last = layers.back();
    for (auto& w : last.weights) w *= out_scale;
    for (auto& b : last.bias) b *= out_scale;
  }

  MlpMeta meta{config.seed, config.trained_on};
  return MlpModel(std::move(layers), std::move(meta));
}

}  // namespace ivalid
