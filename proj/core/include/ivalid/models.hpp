#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ivalid/interval_box.hpp"
#include "ivalid/interval_jet.hpp"

namespace ivalid {

/// Observation function g : R^n -> R^m together with an inclusion function.
///
/// eval_box must contain eval_point over its argument. Implementations are
/// immutable and may be evaluated from several threads at once.
class ObservationModel {
 public:
  virtual ~ObservationModel() = default;

  virtual std::size_t param_dim() const = 0;
  virtual std::size_t obs_dim() const = 0;

  virtual std::vector<double> eval_point(std::span<const double> x) const = 0;
  virtual IntervalBox eval_box(const IntervalBox& x) const = 0;

  /// Jacobian-carrying evaluation for the mean-value form. Models that do not
  /// provide one return nullopt and only the natural form is used.
  virtual std::optional<std::vector<IntervalJet>> eval_jet(
      std::span<const IntervalJet> /*x*/) const {
    return std::nullopt;
  }
};

/// Estimator psi : R^m -> R^n, with the same contract as ObservationModel.
class EstimatorModel {
 public:
  virtual ~EstimatorModel() = default;

  virtual std::size_t obs_dim() const = 0;
  virtual std::size_t param_dim() const = 0;

  virtual std::vector<double> eval_point(std::span<const double> y) const = 0;
  virtual IntervalBox eval_box(const IntervalBox& y) const = 0;

  virtual std::optional<std::vector<IntervalJet>> eval_jet(
      std::span<const IntervalJet> /*y*/) const {
    return std::nullopt;
  }
};

}  // namespace ivalid
