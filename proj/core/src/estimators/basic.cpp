#include "ivalid/estimators/basic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ivalid {

namespace {

void check_dim(std::size_t expected, std::size_t actual, const char* who) {
  if (expected != actual) {
    throw std::invalid_argument(std::string(who) + ": expected input of dimension " +
                                std::to_string(expected) + ", got " +
                                std::to_string(actual));
  }
}

}  // namespace

IdentityObservation::IdentityObservation(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("identity model needs dim >= 1");
}

std::vector<double> IdentityObservation::eval_point(
    std::span<const double> x) const {
  check_dim(dim_, x.size(), "identity observation");
  return {x.begin(), x.end()};
}

IntervalBox IdentityObservation::eval_box(const IntervalBox& x) const {
  check_dim(dim_, x.dim(), "identity observation");
  return x;
}

std::optional<std::vector<IntervalJet>> IdentityObservation::eval_jet(
    std::span<const IntervalJet> x) const {
  check_dim(dim_, x.size(), "identity observation");
  return std::vector<IntervalJet>(x.begin(), x.end());
}

IdentityEstimator::IdentityEstimator(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("identity model needs dim >= 1");
}

std::vector<double> IdentityEstimator::eval_point(
    std::span<const double> y) const {
  check_dim(dim_, y.size(), "identity estimator");
  return {y.begin(), y.end()};
}

IntervalBox IdentityEstimator::eval_box(const IntervalBox& y) const {
  check_dim(dim_, y.dim(), "identity estimator");
  return y;
}

std::optional<std::vector<IntervalJet>> IdentityEstimator::eval_jet(
    std::span<const IntervalJet> y) const {
  check_dim(dim_, y.size(), "identity estimator");
  return std::vector<IntervalJet>(y.begin(), y.end());
}

ConstantEstimator::ConstantEstimator(std::vector<double> value,
                                     std::size_t obs_dim)
    : value_(std::move(value)), obs_dim_(obs_dim) {
  if (value_.empty() || obs_dim_ == 0) {
    throw std::invalid_argument("constant estimator needs non-empty dimensions");
  }
  for (double v : value_) {
    if (!std::isfinite(v)) throw std::invalid_argument("constant estimator value is not finite");
  }
}

std::vector<double> ConstantEstimator::eval_point(
    std::span<const double> y) const {
  check_dim(obs_dim_, y.size(), "constant estimator");
  return value_;
}

IntervalBox ConstantEstimator::eval_box(const IntervalBox& y) const {
  check_dim(obs_dim_, y.dim(), "constant estimator");
  return IntervalBox::point(value_);
}

std::optional<std::vector<IntervalJet>> ConstantEstimator::eval_jet(
    std::span<const IntervalJet> y) const {
  check_dim(obs_dim_, y.size(), "constant estimator");
  std::vector<IntervalJet> out;
  const std::size_t n = y.empty() ? 0 : y.front().tangents();
  for (double v : value_) out.emplace_back(Interval::point(v), n);
  return out;
}

UnsoundMidpointEstimator::UnsoundMidpointEstimator(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("test_unsound model needs dim >= 1");
}

std::vector<double> UnsoundMidpointEstimator::eval_point(
    std::span<const double> y) const {
  check_dim(dim_, y.size(), "test_unsound estimator");
  return {y.begin(), y.end()};
}

IntervalBox UnsoundMidpointEstimator::eval_box(const IntervalBox& y) const {
  check_dim(dim_, y.dim(), "test_unsound estimator");
  return IntervalBox::point(y.midpoint());
}

}  // namespace ivalid
