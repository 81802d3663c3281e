#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>

namespace ivalid {

namespace rounding {

// Directed rounding on top of round-to-nearest. Each helper computes the
// float result, recovers the sign of its error with an error-free
// transformation and steps one ulp only when the float result lies on the
// wrong side of the exact value.

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Below kTiny the exact-product residual may itself be inexact; above kHuge
// Dekker's splitting may overflow. Outside that range bounds are simply
// stepped.
inline constexpr double kTiny = 0x1p-960;
inline constexpr double kHuge = 0x1p+990;

inline double step_down(double v) { return std::nextafter(v, -kInf); }
inline double step_up(double v) { return std::nextafter(v, kInf); }

/// e such that a * b == p + e exactly, where p = fl(a * b).
inline double product_error(double a, double b, double p) {
#ifdef FP_FAST_FMA
  return std::fma(a, b, -p);
#else
  constexpr double kSplit = 134217729.0;  // 2^27 + 1
  const double ca = kSplit * a;
  const double ah = ca - (ca - a);
  const double al = a - ah;
  const double cb = kSplit * b;
  const double bh = cb - (cb - b);
  const double bl = b - bh;
  return ((ah * bh - p) + ah * bl + al * bh) + al * bl;
#endif
}

inline bool exact_product_range(double a, double b, double p) {
  return std::fabs(p) >= kTiny && std::fabs(a) <= kHuge && std::fabs(b) <= kHuge;
}

inline double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    return (std::isfinite(a) && std::isfinite(b)) ? step_down(s) : s;
  }
  const double bv = s - a;
  const double err = (a - (s - bv)) + (b - bv);
  return err < 0.0 ? step_down(s) : s;
}

inline double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    return (std::isfinite(a) && std::isfinite(b)) ? step_up(s) : s;
  }
  const double bv = s - a;
  const double err = (a - (s - bv)) + (b - bv);
  return err > 0.0 ? step_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

// 0 * inf is taken as 0, the usual interval convention.
inline double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    return (std::isfinite(a) && std::isfinite(b)) ? step_down(p) : p;
  }
  if (!exact_product_range(a, b, p)) return step_down(p);
  return product_error(a, b, p) < 0.0 ? step_down(p) : p;
}

inline double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    return (std::isfinite(a) && std::isfinite(b)) ? step_up(p) : p;
  }
  if (!exact_product_range(a, b, p)) return step_up(p);
  return product_error(a, b, p) > 0.0 ? step_up(p) : p;
}

// Sign of a - q * b for q = fl(a / b); a - fl(q * b) is exact (Sterbenz).
inline int division_residual_sign(double a, double b, double q) {
  const double p = q * b;
  const double d = a - p;
  const double e = product_error(q, b, p);
  return d > e ? 1 : (d < e ? -1 : 0);
}

// b != 0 is required.
inline double div_down(double a, double b) {
  if (a == 0.0) return 0.0;
  const double q = a / b;
  if (std::isnan(q)) return -kInf;  // inf / inf
  if (!std::isfinite(q) || !std::isfinite(a) || !std::isfinite(b)) {
    return std::isinf(q) && std::isfinite(a) && std::isfinite(b) ? step_down(q)
                                                                  : q;
  }
  if (q == 0.0 || !exact_product_range(q, b, a)) return step_down(q);
  // a - q*b has the sign of (a/b - q) * b.
  const int r = division_residual_sign(a, b, q);
  const bool overshoot = (r > 0 && b < 0.0) || (r < 0 && b > 0.0);
  return overshoot ? step_down(q) : q;
}

inline double div_up(double a, double b) {
  if (a == 0.0) return 0.0;
  const double q = a / b;
  if (std::isnan(q)) return kInf;
  if (!std::isfinite(q) || !std::isfinite(a) || !std::isfinite(b)) {
    return std::isinf(q) && std::isfinite(a) && std::isfinite(b) ? step_up(q)
                                                                  : q;
  }
  if (q == 0.0 || !exact_product_range(q, b, a)) return step_up(q);
  const int r = division_residual_sign(a, b, q);
  const bool undershoot = (r > 0 && b > 0.0) || (r < 0 && b < 0.0);
  return undershoot ? step_up(q) : q;
}

// Sign of x - r * r for r = fl(sqrt(x)).
inline int sqrt_residual_sign(double x, double r) {
  const double p = r * r;
  const double d = x - p;
  const double e = product_error(r, r, p);
  return d > e ? 1 : (d < e ? -1 : 0);
}

// x >= 0.
inline double sqrt_down(double x) {
  const double r = std::sqrt(x);
  if (r == 0.0 || !std::isfinite(r)) return r;
  if (!exact_product_range(r, r, x)) return step_down(r);
  return sqrt_residual_sign(x, r) < 0 ? step_down(r) : r;
}

inline double sqrt_up(double x) {
  const double r = std::sqrt(x);
  if (r == 0.0 || !std::isfinite(r)) return r;
  if (!exact_product_range(r, r, x)) return step_up(r);
  return sqrt_residual_sign(x, r) > 0 ? step_up(r) : r;
}

}  // namespace rounding

/// Closed, nonempty real interval [lb, ub] with outward-rounded arithmetic.
///
/// Bounds are never NaN, lb is never +inf and ub is never -inf. Unbounded
/// intervals only arise from entire() or from division by an interval that
/// contains zero.
class Interval {
 public:
  /// The point interval [0, 0].
  constexpr Interval() = default;

  /// Throws std::invalid_argument when lb > ub or either bound is NaN.
  Interval(double lb, double ub);

  static Interval point(double v) { return Interval(v, v); }
  static Interval entire() {
    Interval r;
    r.lb_ = -rounding::kInf;
    r.ub_ = rounding::kInf;
    return r;
  }

  double lb() const { return lb_; }
  double ub() const { return ub_; }

  /// ub - lb rounded upward, so lb + width() >= ub always.
  double width() const { return rounding::sub_up(ub_, lb_); }

  /// A float inside [lb, ub]; exact midpoint up to one rounding.
  double mid() const;

  bool is_point() const { return lb_ == ub_; }
  bool is_bounded() const { return std::isfinite(lb_) && std::isfinite(ub_); }
  bool contains(double x) const { return lb_ <= x && x <= ub_; }
  bool contains_zero() const { return lb_ <= 0.0 && 0.0 <= ub_; }
  bool subset_of(const Interval& other) const {
    return other.lb_ <= lb_ && ub_ <= other.ub_;
  }

  /// True when the float midpoint lies strictly inside, i.e. bisection
  /// yields two strictly smaller halves.
  bool splittable() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  // Unchecked; callers guarantee the invariants.
  struct Raw {};
  constexpr Interval(Raw, double lb, double ub) : lb_(lb), ub_(ub) {}

  double lb_ = 0.0;
  double ub_ = 0.0;

  friend Interval operator+(const Interval&, const Interval&);
  friend Interval operator-(const Interval&, const Interval&);
  friend Interval operator-(const Interval&);
  friend Interval operator*(const Interval&, const Interval&);
  friend Interval operator*(double, const Interval&);
  friend Interval operator/(const Interval&, const Interval&);
  friend Interval sqr(const Interval&);
  friend Interval sqrt(const Interval&);
  friend Interval relu(const Interval&);
  friend Interval hull(const Interval&, const Interval&);
  friend std::optional<Interval> intersect(const Interval&, const Interval&);
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Scalar multiple; cheaper than promoting the scalar to a point interval.
Interval operator*(double s, const Interval& a);
/// Quotient. A divisor containing zero gives entire().
Interval operator/(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, double b) {
  return a + Interval::point(b);
}
inline Interval operator-(const Interval& a, double b) {
  return a - Interval::point(b);
}
inline Interval operator-(double a, const Interval& b) {
  return Interval::point(a) - b;
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }

/// Tight square: [0, max(lb², ub²)] when 0 ∈ a.
Interval sqr(const Interval& a);

/// Square root. Throws std::domain_error when ub < 0; a negative lower bound
/// is clamped to 0 (sums of outward-rounded squares may dip below zero).
Interval sqrt(const Interval& a);

/// Exact image of relu(x) = max(0, x).
Interval relu(const Interval& a);

Interval hull(const Interval& a, const Interval& b);

/// Empty optional when the intervals are disjoint.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

inline double width(const Interval& a) { return a.width(); }

/// Encloses bias + sum_c w[c] * x[c] for point weights w. Evaluated in
/// midpoint-radius form in plain floating point, widened by an a priori
/// bound on the accumulated rounding error; exact in real arithmetic up to
/// that bound. Falls back to term-by-term evaluation when anything is not
/// finite. Throws std::invalid_argument on a size mismatch.
Interval affine_dot(std::span<const double> w, std::span<const Interval> x,
                    double bias);

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace ivalid
