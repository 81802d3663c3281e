#pragma once

#include <cstddef>
#include <vector>

#include "ivalid/models.hpp"

namespace ivalid {

/// g(x) = x on R^n.
class IdentityObservation final : public ObservationModel {
 public:
  explicit IdentityObservation(std::size_t dim);

  std::size_t param_dim() const override { return dim_; }
  std::size_t obs_dim() const override { return dim_; }
  std::vector<double> eval_point(std::span<const double> x) const override;
  IntervalBox eval_box(const IntervalBox& x) const override;
  std::optional<std::vector<IntervalJet>> eval_jet(
      std::span<const IntervalJet> x) const override;

 private:
  std::size_t dim_;
};

/// psi(y) = y on R^n.
class IdentityEstimator final : public EstimatorModel {
 public:
  explicit IdentityEstimator(std::size_t dim);

  std::size_t obs_dim() const override { return dim_; }
  std::size_t param_dim() const override { return dim_; }
  std::vector<double> eval_point(std::span<const double> y) const override;
  IntervalBox eval_box(const IntervalBox& y) const override;
  std::optional<std::vector<IntervalJet>> eval_jet(
      std::span<const IntervalJet> y) const override;

 private:
  std::size_t dim_;
};

/// psi(y) = value for every observation of dimension obs_dim.
class ConstantEstimator final : public EstimatorModel {
 public:
  ConstantEstimator(std::vector<double> value, std::size_t obs_dim);

  std::size_t obs_dim() const override { return obs_dim_; }
  std::size_t param_dim() const override { return value_.size(); }
  std::vector<double> eval_point(std::span<const double> y) const override;
  IntervalBox eval_box(const IntervalBox& y) const override;
  std::optional<std::vector<IntervalJet>> eval_jet(
      std::span<const IntervalJet> y) const override;

 private:
  std::vector<double> value_;
  std::size_t obs_dim_;
};

/// Identity on points whose interval evaluation deliberately collapses to
/// the midpoint of its argument. It violates the inclusion contract and exists
/// only to exercise certification failures.
class UnsoundMidpointEstimator final : public EstimatorModel {
 public:
  explicit UnsoundMidpointEstimator(std::size_t dim);

  std::size_t obs_dim() const override { return dim_; }
  std::size_t param_dim() const override { return dim_; }
  std::vector<double> eval_point(std::span<const double> y) const override;
  IntervalBox eval_box(const IntervalBox& y) const override;

 private:
  std::size_t dim_;
};

}  // namespace ivalid
