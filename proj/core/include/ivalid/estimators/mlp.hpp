#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivalid/models.hpp"

namespace ivalid {

enum class Activation { relu, linear };

std::string_view to_string(Activation a);
Activation parse_activation(std::string_view name);

/// Dense layer out = act(W in + b), W stored row-major (rows x cols).
struct DenseLayer {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> weights;
  std::vector<double> bias;
  Activation activation = Activation::relu;

  double weight(std::size_t r, std::size_t c) const { return weights[r * cols + c]; }
};

struct MlpMeta {
  std::optional<std::uint64_t> seed;
  std::string trained_on;
};

/// Malformed network definition or weight file.
class MlpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Feed-forward network of dense layers with relu or linear activations.
class MlpModel {
 public:
  /// Throws MlpError naming the offending layer on inconsistent shapes or
  /// non-finite parameters.
  explicit MlpModel(std::vector<DenseLayer> layers, MlpMeta meta = {});

  std::size_t input_dim() const { return layers_.front().cols; }
  std::size_t output_dim() const { return layers_.back().rows; }
  const std::vector<DenseLayer>& layers() const { return layers_; }
  const MlpMeta& meta() const { return meta_; }

  /// Plain forward pass.
  std::vector<double> forward(std::span<const double> y) const;
  /// Interval forward pass: per layer, sum of point-weight times interval
  /// input plus bias, then relu where the layer uses it.
  IntervalBox forward(const IntervalBox& y) const;
  std::vector<IntervalJet> forward(std::span<const IntervalJet> y) const;

 private:
  std::vector<DenseLayer> layers_;
  MlpMeta meta_;
};

/// Reads the JSON weight file format:
/// {"layers": [{"weights": [[...]], "bias": [...], "activation": "relu"}],
///  "meta": {"seed": 0, "trained_on": "..."}}
MlpModel mlp_load(const std::filesystem::path& path);
/// Writes the same format with round-trip exact numbers.
void mlp_save(const MlpModel& model, const std::filesystem::path& path);

/// In-memory variants of load/save.
MlpModel mlp_from_json_text(std::string_view text);
std::string mlp_to_json_text(const MlpModel& model);

struct TrainingSet {
  std::vector<std::vector<double>> inputs;
  std::vector<std::vector<double>> targets;
};

struct TrainConfig {
  /// Layer sizes including input and output, e.g. {3, 32, 32, 2}.
  std::vector<std::size_t> architecture;
  Activation hidden_activation = Activation::relu;
  Activation output_activation = Activation::relu;
  std::size_t epochs = 1000;
  double rate = 0.05;
  std::uint64_t seed = 0;
  /// Train on standardized inputs and scaled targets, then fold the
  /// transforms back into the first and last layers.
  bool normalize = true;
  std::string trained_on;
};

/// Full-batch gradient descent on the mean squared error, backpropagating
/// through relu with subgradient 0 at 0. Deterministic given the seed.
/// `on_epoch(epoch, loss)` sees the loss before each update. Throws
/// MlpError on an empty or inconsistent data set and on divergence.
MlpModel mlp_train(const TrainingSet& data, const TrainConfig& config,
                   const std::function<void(std::size_t, double)>& on_epoch = {});

/// Adapts an MlpModel to the estimator contract.
class MlpEstimator final : public EstimatorModel {
 public:
  explicit MlpEstimator(std::shared_ptr<const MlpModel> model);

  const MlpModel& model() const { return *model_; }

  std::size_t obs_dim() const override { return model_->input_dim(); }
  std::size_t param_dim() const override { return model_->output_dim(); }
  std::vector<double> eval_point(std::span<const double> y) const override;
  IntervalBox eval_box(const IntervalBox& y) const override;
  std::optional<std::vector<IntervalJet>> eval_jet(
      std::span<const IntervalJet> y) const override;

 private:
  std::shared_ptr<const MlpModel> model_;
};

}  // namespace ivalid
