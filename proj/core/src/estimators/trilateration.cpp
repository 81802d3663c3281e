#include "ivalid/estimators/trilateration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ivalid {

namespace {

template <class T>
std::vector<T> distances(const std::vector<Point2>& landmarks, const T& x,
                         const T& y) {
  std::vector<T> out;
  out.reserve(landmarks.size());
  for (const auto& a : landmarks) out.push_back(norm2(a[0] - x, a[1] - y));
  return out;
}

void check_param_dim(std::size_t d) {
  if (d != 2) {
    throw std::invalid_argument("trilateration: expected a 2-D position, got dimension " +
                                std::to_string(d));
  }
}

}  // namespace

TrilaterationModel::TrilaterationModel(std::vector<Point2> landmarks)
    : landmarks_(std::move(landmarks)) {
  if (landmarks_.size() < 3) {
    throw std::invalid_argument("trilateration needs at least 3 landmarks");
  }
  for (std::size_t i = 0; i < landmarks_.size(); ++i) {
    if (!std::isfinite(landmarks_[i][0]) || !std::isfinite(landmarks_[i][1])) {
      throw std::invalid_argument("landmark " + std::to_string(i) + " is not finite");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (landmarks_[i] == landmarks_[j]) {
        throw std::invalid_argument("landmarks " + std::to_string(j) + " and " +
                                    std::to_string(i) + " coincide");
      }
    }
  }
}

std::vector<double> TrilaterationModel::eval_point(
    std::span<const double> x) const {
  check_param_dim(x.size());
  std::vector<double> d;
  d.reserve(landmarks_.size());
  for (const auto& a : landmarks_) {
    const double dx = a[0] - x[0];
    const double dy = a[1] - x[1];
    d.push_back(std::sqrt(dx * dx + dy * dy));
  }
  return d;
}

IntervalBox TrilaterationModel::eval_box(const IntervalBox& x) const {
  check_param_dim(x.dim());
  return IntervalBox(distances(landmarks_, x[0], x[1]));
}

std::optional<std::vector<IntervalJet>> TrilaterationModel::eval_jet(
    std::span<const IntervalJet> x) const {
  check_param_dim(x.size());
  return distances(landmarks_, x[0], x[1]);
}

}  // namespace ivalid
