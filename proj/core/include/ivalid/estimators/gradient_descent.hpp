#pragma once

#include <cstddef>
#include <memory>

#include "ivalid/estimators/trilateration.hpp"
#include "ivalid/models.hpp"

namespace ivalid {

struct GradientDescentConfig {
  std::size_t iterations = 50;
  double step = 0.01;
  Point2 init{0.0, 0.0};
};

/// Range-based position estimator: exactly `iterations` steps of
///   x <- x - step * grad c(x),  c(x) = sum_i (||a_i - x|| - y_i)^2,
/// from a fixed start point. A fixed step count makes the estimator a finite
/// composition of elementary operations, hence interval-extensible.
///
/// When an iterate sits exactly on a landmark the point version drops that
/// landmark's term for the step. The interval version encloses the unit
/// direction (x - a_i) / ||x - a_i|| by [-1, 1] whenever the distance may
/// vanish, which contains every value the point version can take.
class GradientDescentEstimator final : public EstimatorModel {
 public:
  /// Throws std::invalid_argument when iterations == 0, step <= 0 or init is
  /// not finite.
  GradientDescentEstimator(std::shared_ptr<const TrilaterationModel> observation,
                           GradientDescentConfig config);

  const GradientDescentConfig& config() const { return config_; }

  std::size_t obs_dim() const override { return observation_->obs_dim(); }
  std::size_t param_dim() const override { return 2; }

  std::vector<double> eval_point(std::span<const double> y) const override;
  IntervalBox eval_box(const IntervalBox& y) const override;
  std::optional<std::vector<IntervalJet>> eval_jet(
      std::span<const IntervalJet> y) const override;

 private:
  std::shared_ptr<const TrilaterationModel> observation_;
  GradientDescentConfig config_;
};

}  // namespace ivalid
