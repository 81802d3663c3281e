#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ivalid/interval.hpp"

namespace ivalid {

inline constexpr std::size_t kMaxTangents = 6;

/// Interval value together with interval enclosures of its partial
/// derivatives with respect to up to kMaxTangents seed variables.
///
/// Evaluating a function on jets seeded over a box X yields the range of the
/// function and an enclosure of its Jacobian over X, which is what the
/// mean-value form needs. Derivatives of relu use its Clarke hull [0, 1] on
/// arguments straddling zero, so the enclosure stays valid for piecewise
/// affine networks.
class IntervalJet {
 public:
  IntervalJet() = default;

  /// Constant: all partials zero.
  IntervalJet(const Interval& value, std::size_t tangents);

  /// Seed variable `index` of `tangents`.
  static IntervalJet variable(const Interval& value, std::size_t tangents,
                              std::size_t index);

  /// Value `value` with every partial unknown (entire()).
  static IntervalJet unknown_slope(const Interval& value, std::size_t tangents);

  /// Value with the given partials; grads.size() is the tangent count.
  static IntervalJet from_parts(const Interval& value, std::span<const Interval> grads);

  /// Same partials, value replaced by a tighter enclosure of the same
  /// quantity.
  IntervalJet with_value(const Interval& value) const {
    IntervalJet r = *this;
    r.value_ = value;
    return r;
  }

  const Interval& value() const { return value_; }
  const Interval& grad(std::size_t i) const { return grad_[i]; }
  std::size_t tangents() const { return n_; }

  friend IntervalJet operator+(const IntervalJet& a, const IntervalJet& b);
  friend IntervalJet operator-(const IntervalJet& a, const IntervalJet& b);
  friend IntervalJet operator-(const IntervalJet& a);
  friend IntervalJet operator*(const IntervalJet& a, const IntervalJet& b);
  friend IntervalJet operator*(double s, const IntervalJet& a);
  friend IntervalJet operator/(const IntervalJet& a, const IntervalJet& b);
  friend IntervalJet operator+(const IntervalJet& a, const Interval& b);
  friend IntervalJet operator-(const Interval& a, const IntervalJet& b);
  friend IntervalJet sqr(const IntervalJet& a);
  friend IntervalJet sqrt(const IntervalJet& a);
  friend IntervalJet relu(const IntervalJet& a);
  friend IntervalJet norm2(const IntervalJet& a, const IntervalJet& b);

 private:
  Interval value_;
  std::array<Interval, kMaxTangents> grad_{};
  std::uint8_t n_ = 0;
};

inline IntervalJet operator+(const IntervalJet& a, double b) {
  return a + Interval::point(b);
}
inline IntervalJet operator-(const IntervalJet& a, double b) {
  return a + Interval::point(-b);
}
inline IntervalJet operator-(double a, const IntervalJet& b) {
  return Interval::point(a) - b;
}
/// Euclidean length sqrt(a^2 + b^2), same value as the plain composition.
/// Its partials are enclosed through the unit vector (a, b) / length, whose
/// components lie in [-1, 1]; where the length may vanish [-1, 1] itself is
/// used, which holds the generalized gradient of the norm at the origin.
IntervalJet norm2(const IntervalJet& a, const IntervalJet& b);

inline Interval norm2(const Interval& a, const Interval& b) {
  return sqrt(sqr(a) + sqr(b));
}

inline IntervalJet& operator+=(IntervalJet& a, const IntervalJet& b) {
  return a = a + b;
}

}  // namespace ivalid
