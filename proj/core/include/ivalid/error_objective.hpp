#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "ivalid/interval_box.hpp"
#include "ivalid/models.hpp"

namespace ivalid {

/// How the error enclosure handed to the optimizer is computed.
enum class InclusionForm {
  /// Composition of natural inclusion functions only.
  natural,
  /// Natural enclosure of x - x̂ intersected with its mean-value form over
  /// X x E (X only when n + m exceeds kMaxTangents). Never wider than
  /// `natural`.
  mean_value,
};

std::string_view to_string(InclusionForm form);
/// Throws std::invalid_argument for unknown names.
InclusionForm parse_inclusion_form(std::string_view name);

/// The estimation error eps(x, e) = ||x - psi(g(x) + e)|| over X0 x E, and the
/// objective f = -eps minimized by Moore-Skelboe.
///
/// The search vector is (x, e) with x first; only the first param_dim()
/// components are ever split.
class ErrorObjective {
 public:
  /// Throws std::invalid_argument naming the first inconsistent pair of
  /// dimensions.
  ErrorObjective(std::shared_ptr<const ObservationModel> observation,
                 std::shared_ptr<const EstimatorModel> estimator,
                 IntervalBox param_box, IntervalBox noise_box,
                 InclusionForm form = InclusionForm::mean_value,
                 std::size_t noise_splits = 1);

  std::size_t param_dim() const { return param_box_.dim(); }
  std::size_t noise_dim() const { return noise_box_.dim(); }
  const IntervalBox& param_box() const { return param_box_; }
  const IntervalBox& noise_box() const { return noise_box_; }
  InclusionForm form() const { return form_; }
  std::size_t noise_splits() const { return noise_splits_; }
  const ObservationModel& observation() const { return *observation_; }
  const EstimatorModel& estimator() const { return *estimator_; }

  /// X0 x E, the initial cover element.
  IntervalBox search_box() const;
  /// {0, ..., n-1}.
  std::vector<std::size_t> split_dims() const;

  /// y = g(x) + e.
  std::vector<double> observe(std::span<const double> x,
                              std::span<const double> e) const;

  /// ||x - psi(g(x) + e)||, Euclidean.
  double error_point(std::span<const double> x,
                     std::span<const double> e) const;

  /// Natural inclusion of error_point over X x E; lower bound >= 0.
  Interval error_box(const IntervalBox& x, const IntervalBox& e) const;

  /// error_box tightened by the mean-value form. Falls
  /// back to error_box when a model provides no jet evaluation.
  Interval error_box_mean_value(const IntervalBox& x,
                                const IntervalBox& e) const;

  /// Enclosure selected by form(). With noise_splits() = k > 1, E is cut
  /// into a fixed k^m grid of equal sub-boxes and the hull of the per-piece
  /// enclosures is returned; the optimizer still never splits E.
  Interval error_enclosure(const IntervalBox& x, const IntervalBox& e) const;

  /// f(B) = -error_enclosure(X, E) for B = X x E.
  Interval objective_box(const IntervalBox& b) const;

  /// -error_point on a concatenated (x, e) vector.
  double objective_point(std::span<const double> p) const;

 private:
  IntervalBox residual_natural(const IntervalBox& x, const IntervalBox& e) const;

  std::shared_ptr<const ObservationModel> observation_;
  std::shared_ptr<const EstimatorModel> estimator_;
  IntervalBox param_box_;
  IntervalBox noise_box_;
  InclusionForm form_;
  std::size_t noise_splits_;
};

/// sqrt(sum sqr(r_i)) with the sqrt clamp, for any residual enclosure.
Interval euclidean_norm(const IntervalBox& residual);

}  // namespace ivalid
