#include "ivalid/estimators/gradient_descent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ivalid {

namespace {

const Interval kUnitRange(-1.0, 1.0);

// Enclosure of d / r for one component of a unit vector with norm r.
Interval unit_component(const Interval& d, const Interval& r) {
  if (r.lb() <= 0.0) return kUnitRange;
  return intersect(d / r, kUnitRange).value_or(kUnitRange);
}

IntervalJet unit_component(const IntervalJet& d, const IntervalJet& r) {
  if (r.value().lb() <= 0.0) {
    return IntervalJet::unknown_slope(kUnitRange, r.tangents());
  }
  const IntervalJet q = d / r;
  return q.with_value(intersect(q.value(), kUnitRange).value_or(kUnitRange));
}

template <class T>
T constant(double v, std::size_t tangents);

template <>
Interval constant<Interval>(double v, std::size_t) {
  return Interval::point(v);
}

template <>
IntervalJet constant<IntervalJet>(double v, std::size_t tangents) {
  return IntervalJet(Interval::point(v), tangents);
}

// Mirrors eval_point operation by operation.
template <class T>
std::vector<T> descend(const std::vector<Point2>& landmarks,
                       std::span<const T> y, const GradientDescentConfig& cfg,
                       std::size_t tangents) {
  T x0 = constant<T>(cfg.init[0], tangents);
  T x1 = constant<T>(cfg.init[1], tangents);
  for (std::size_t k = 0; k < cfg.iterations; ++k) {
    T g0 = constant<T>(0.0, tangents);
    T g1 = constant<T>(0.0, tangents);
    for (std::size_t i = 0; i < landmarks.size(); ++i) {
      const T d0 = x0 - landmarks[i][0];
      const T d1 = x1 - landmarks[i][1];
      const T r = norm2(d0, d1);
      const T residual = 2.0 * (r - y[i]);
      g0 += residual * unit_component(d0, r);
      g1 += residual * unit_component(d1, r);
    }
    x0 = x0 - cfg.step * g0;
    x1 = x1 - cfg.step * g1;
  }
  return {x0, x1};
}

}  // namespace

GradientDescentEstimator::GradientDescentEstimator(
    std::shared_ptr<const TrilaterationModel> observation,
    GradientDescentConfig config)
    : observation_(std::move(observation)), config_(config) {
  if (!observation_) throw std::invalid_argument("gradient descent: null observation model");
  if (config_.iterations == 0) {
    throw std::invalid_argument("gradient descent: iterations must be >= 1");
  }
  if (!(config_.step > 0.0) || !std::isfinite(config_.step)) {
    throw std::invalid_argument("gradient descent: step must be positive and finite");
  }
  if (!std::isfinite(config_.init[0]) || !std::isfinite(config_.init[1])) {
    throw std::invalid_argument("gradient descent: init must be finite");
  }
}

std::vector<double> GradientDescentEstimator::eval_point(
    std::span<const double> y) const {
  if (y.size() != obs_dim()) {
    throw std::invalid_argument("gradient descent: expected " +
                                std::to_string(obs_dim()) + " ranges, got " +
                                std::to_string(y.size()));
  }
  const auto& landmarks = observation_->landmarks();
  double x0 = config_.init[0];
  double x1 = config_.init[1];
  for (std::size_t k = 0; k < config_.iterations; ++k) {
    double g0 = 0.0;
    double g1 = 0.0;
    for (std::size_t i = 0; i < landmarks.size(); ++i) {
      const double d0 = x0 - landmarks[i][0];
      const double d1 = x1 - landmarks[i][1];
      const double r = std::sqrt(d0 * d0 + d1 * d1);
      if (r == 0.0) continue;  // singular direction: term dropped
      const double residual = 2.0 * (r - y[i]);
      g0 += residual * std::clamp(d0 / r, -1.0, 1.0);
      g1 += residual * std::clamp(d1 / r, -1.0, 1.0);
    }
    x0 = x0 - config_.step * g0;
    x1 = x1 - config_.step * g1;
  }
  return {x0, x1};
}

IntervalBox GradientDescentEstimator::eval_box(const IntervalBox& y) const {
  if (y.dim() != obs_dim()) {
    throw std::invalid_argument("gradient descent: expected " +
                                std::to_string(obs_dim()) + " ranges");
  }
  return IntervalBox(descend<Interval>(observation_->landmarks(),
                                       std::span<const Interval>(y.components()),
                                       config_, 0));
}

std::optional<std::vector<IntervalJet>> GradientDescentEstimator::eval_jet(
    std::span<const IntervalJet> y) const {
  if (y.size() != obs_dim()) {
    throw std::invalid_argument("gradient descent: expected " +
                                std::to_string(obs_dim()) + " ranges");
  }
  std::size_t tangents = 0;
  for (const auto& j : y) tangents = std::max(tangents, j.tangents());
  return descend<IntervalJet>(observation_->landmarks(), y, config_, tangents);
}

}  // namespace ivalid
