#include "ivalid/interval.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ivalid {

using namespace rounding;

Interval::Interval(double lb, double ub) : lb_(lb), ub_(ub) {
  if (std::isnan(lb) || std::isnan(ub)) {
    throw std::invalid_argument("interval bound is NaN");
  }
  if (lb > ub) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "reversed interval bounds [" << lb << ", " << ub << "]";
    throw std::invalid_argument(msg.str());
  }
  if (lb == kInf || ub == -kInf) {
    throw std::invalid_argument("interval bound at the wrong infinity");
  }
}

double Interval::mid() const {
  if (!is_bounded()) {
    if (std::isfinite(lb_)) return lb_;
    if (std::isfinite(ub_)) return ub_;
    return 0.0;
  }
  const double m = 0.5 * lb_ + 0.5 * ub_;
  return std::clamp(m, lb_, ub_);
}

bool Interval::splittable() const {
  if (!is_bounded()) return false;
  const double m = mid();
  return lb_ < m && m < ub_;
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(Interval::Raw{}, add_down(a.lb_, b.lb_),
                  add_up(a.ub_, b.ub_));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(Interval::Raw{}, sub_down(a.lb_, b.ub_),
                  sub_up(a.ub_, b.lb_));
}

Interval operator-(const Interval& a) {
  return Interval(Interval::Raw{}, -a.ub_, -a.lb_);
}

Interval operator*(const Interval& a, const Interval& b) {
  const double lo = std::min({mul_down(a.lb_, b.lb_), mul_down(a.lb_, b.ub_),
                              mul_down(a.ub_, b.lb_), mul_down(a.ub_, b.ub_)});
  const double hi = std::max({mul_up(a.lb_, b.lb_), mul_up(a.lb_, b.ub_),
                              mul_up(a.ub_, b.lb_), mul_up(a.ub_, b.ub_)});
  return Interval(Interval::Raw{}, lo, hi);
}

Interval operator*(double s, const Interval& a) {
  if (s >= 0.0) {
    return Interval(Interval::Raw{}, mul_down(s, a.lb_), mul_up(s, a.ub_));
  }
  return Interval(Interval::Raw{}, mul_down(s, a.ub_), mul_up(s, a.lb_));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) return Interval::entire();
  const double lo = std::min({div_down(a.lb_, b.lb_), div_down(a.lb_, b.ub_),
                              div_down(a.ub_, b.lb_), div_down(a.ub_, b.ub_)});
  const double hi = std::max({div_up(a.lb_, b.lb_), div_up(a.lb_, b.ub_),
                              div_up(a.ub_, b.lb_), div_up(a.ub_, b.ub_)});
  return Interval(Interval::Raw{}, lo, hi);
}

Interval sqr(const Interval& a) {
  if (a.lb_ >= 0.0) {
    return Interval(Interval::Raw{}, mul_down(a.lb_, a.lb_),
                    mul_up(a.ub_, a.ub_));
  }
  if (a.ub_ <= 0.0) {
    return Interval(Interval::Raw{}, mul_down(a.ub_, a.ub_),
                    mul_up(a.lb_, a.lb_));
  }
  return Interval(Interval::Raw{}, 0.0,
                  std::max(mul_up(a.lb_, a.lb_), mul_up(a.ub_, a.ub_)));
}

Interval sqrt(const Interval& a) {
  if (a.ub_ < 0.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "sqrt of negative interval " << a;
    throw std::domain_error(msg.str());
  }
  const double lo = a.lb_ <= 0.0 ? 0.0 : sqrt_down(a.lb_);
  return Interval(Interval::Raw{}, lo, sqrt_up(a.ub_));
}

Interval relu(const Interval& a) {
  return Interval(Interval::Raw{}, std::max(0.0, a.lb_), std::max(0.0, a.ub_));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(Interval::Raw{}, std::min(a.lb_, b.lb_),
                  std::max(a.ub_, b.ub_));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lb_, b.lb_);
  const double hi = std::min(a.ub_, b.ub_);
  if (lo > hi) return std::nullopt;
  return Interval(Interval::Raw{}, lo, hi);
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << '[' << a.lb() << ", " << a.ub() << ']';
}

Interval affine_dot(std::span<const double> w, std::span<const Interval> x,
                    double bias) {
  using namespace rounding;
  if (w.size() != x.size()) throw std::invalid_argument("affine_dot: size mismatch");
  const std::size_t n = w.size();

  // s ~ bias + w.mid(x), a ~ |bias| + |w|.|mid(x)|, t ~ |w|.rad(x).
  double s = bias;
  double a = std::fabs(bias);
  double t = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    const double lo = x[c].lb();
    const double hi = x[c].ub();
    const double m = std::min(std::max(0.5 * lo + 0.5 * hi, lo), hi);
    const double r = std::max(sub_up(hi, m), sub_up(m, lo));
    const double p = w[c] * m;
    s += p;
    a += std::fabs(p);
    t += std::fabs(w[c]) * r;
  }

  // Recursive summation of k = n + 1 terms errs by at most gamma_k times the
  // sum of magnitudes; a and t are themselves low by at most that factor.
  // The last term covers underflow in the products.
  const double ku = static_cast<double>(n + 1) * 0x1p-53;
  const double gamma = div_up(ku, sub_down(1.0, ku));
  const double grow = add_up(1.0, mul_up(2.0, gamma));
  double rad = mul_up(add_up(t, mul_up(gamma, a)), grow);
  rad = add_up(rad, static_cast<double>(2 * n + 2) * 0x1p-1074);

  if (std::isfinite(s) && std::isfinite(rad) && ku < 0.5) {
    return Interval(sub_down(s, rad), add_up(s, rad));
  }
  Interval acc = Interval::point(bias);
  for (std::size_t c = 0; c < n; ++c) acc += w[c] * x[c];
  return acc;
}

}  // namespace ivalid
