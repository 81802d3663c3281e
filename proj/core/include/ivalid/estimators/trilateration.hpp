#pragma once

#include <array>
#include <vector>

#include "ivalid/models.hpp"

namespace ivalid {

using Point2 = std::array<double, 2>;

/// Range observations: g(x)_i = ||landmark_i - x|| for a planar position x.
class TrilaterationModel final : public ObservationModel {
 public:
  /// Requires at least three finite, pairwise distinct landmarks.
  explicit TrilaterationModel(std::vector<Point2> landmarks);

  const std::vector<Point2>& landmarks() const { return landmarks_; }

  std::size_t param_dim() const override { return 2; }
  std::size_t obs_dim() const override { return landmarks_.size(); }

  std::vector<double> eval_point(std::span<const double> x) const override;
  /// Component i is sqrt(sqr(a_i.x - X0) + sqr(a_i.y - X1)).
  IntervalBox eval_box(const IntervalBox& x) const override;
  std::optional<std::vector<IntervalJet>> eval_jet(
      std::span<const IntervalJet> x) const override;

 private:
  std::vector<Point2> landmarks_;
};

}  // namespace ivalid
