#include "ivalid/interval_jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivalid {

namespace {

std::size_t common_tangents(const IntervalJet& a, const IntervalJet& b) {
  return std::max(a.tangents(), b.tangents());
}

}  // namespace

IntervalJet::IntervalJet(const Interval& value, std::size_t tangents)
    : value_(value), n_(static_cast<std::uint8_t>(tangents)) {
  if (tangents > kMaxTangents) {
    throw std::invalid_argument("IntervalJet: too many tangents");
  }
}

IntervalJet IntervalJet::from_parts(const Interval& value,
                                    std::span<const Interval> grads) {
  IntervalJet r(value, grads.size());
  for (std::size_t i = 0; i < grads.size(); ++i) r.grad_[i] = grads[i];
  return r;
}

IntervalJet IntervalJet::variable(const Interval& value, std::size_t tangents,
                                  std::size_t index) {
  if (index >= tangents) throw std::invalid_argument("IntervalJet: bad seed index");
  IntervalJet j(value, tangents);
  j.grad_[index] = Interval::point(1.0);
  return j;
}

IntervalJet IntervalJet::unknown_slope(const Interval& value,
                                       std::size_t tangents) {
  IntervalJet j(value, tangents);
  for (std::size_t i = 0; i < tangents; ++i) j.grad_[i] = Interval::entire();
  return j;
}

// Constants built with zero tangents mix freely with seeded jets: missing
// partials are zero.

IntervalJet operator+(const IntervalJet& a, const IntervalJet& b) {
  IntervalJet r;
  r.value_ = a.value_ + b.value_;
  r.n_ = static_cast<std::uint8_t>(common_tangents(a, b));
  for (std::size_t i = 0; i < r.n_; ++i) r.grad_[i] = a.grad_[i] + b.grad_[i];
  return r;
}

IntervalJet operator-(const IntervalJet& a, const IntervalJet& b) {
  IntervalJet r;
  r.value_ = a.value_ - b.value_;
  r.n_ = static_cast<std::uint8_t>(common_tangents(a, b));
  for (std::size_t i = 0; i < r.n_; ++i) r.grad_[i] = a.grad_[i] - b.grad_[i];
  return r;
}

IntervalJet operator-(const IntervalJet& a) {
  IntervalJet r;
  r.value_ = -a.value_;
  r.n_ = a.n_;
  for (std::size_t i = 0; i < r.n_; ++i) r.grad_[i] = -a.grad_[i];
  return r;
}

IntervalJet operator*(const IntervalJet& a, const IntervalJet& b) {
  IntervalJet r;
  r.value_ = a.value_ * b.value_;
  r.n_ = static_cast<std::uint8_t>(common_tangents(a, b));
  for (std::size_t i = 0; i < r.n_; ++i) {
    r.grad_[i] = a.grad_[i] * b.value_ + a.value_ * b.grad_[i];
  }
  return r;
}

IntervalJet operator*(double s, const IntervalJet& a) {
  IntervalJet r;
  r.value_ = s * a.value_;
  r.n_ = a.n_;
  for (std::size_t i = 0; i < r.n_; ++i) r.grad_[i] = s * a.grad_[i];
  return r;
}

IntervalJet operator/(const IntervalJet& a, const IntervalJet& b) {
  IntervalJet r;
  r.value_ = a.value_ / b.value_;
  r.n_ = static_cast<std::uint8_t>(common_tangents(a, b));
  for (std::size_t i = 0; i < r.n_; ++i) {
    r.grad_[i] = (a.grad_[i] - r.value_ * b.grad_[i]) / b.value_;
  }
  return r;
}

IntervalJet operator+(const IntervalJet& a, const Interval& b) {
  IntervalJet r = a;
  r.value_ = a.value_ + b;
  return r;
}

IntervalJet operator-(const Interval& a, const IntervalJet& b) {
  IntervalJet r = -b;
  r.value_ = a - b.value_;
  return r;
}

IntervalJet sqr(const IntervalJet& a) {
  IntervalJet r;
  r.value_ = sqr(a.value_);
  r.n_ = a.n_;
  const Interval twice = 2.0 * a.value_;
  for (std::size_t i = 0; i < r.n_; ++i) r.grad_[i] = twice * a.grad_[i];
  return r;
}

IntervalJet sqrt(const IntervalJet& a) {
  IntervalJet r;
  r.value_ = sqrt(a.value_);
  r.n_ = a.n_;
  // Division by an enclosure touching zero yields entire().
  const Interval denom = 2.0 * r.value_;
  for (std::size_t i = 0; i < r.n_; ++i) r.grad_[i] = a.grad_[i] / denom;
  return r;
}

IntervalJet relu(const IntervalJet& a) {
  IntervalJet r;
  r.value_ = relu(a.value_);
  r.n_ = a.n_;
  if (a.value_.lb() >= 0.0) {
    r.grad_ = a.grad_;
  } else if (a.value_.ub() <= 0.0) {
    // grads stay zero
  } else {
    for (std::size_t i = 0; i < r.n_; ++i) {
      r.grad_[i] = hull(Interval(), a.grad_[i]);
    }
  }
  return r;
}

IntervalJet norm2(const IntervalJet& a, const IntervalJet& b) {
  const Interval unit(-1.0, 1.0);
  const Interval length = sqrt(sqr(a.value_) + sqr(b.value_));
  Interval ua = unit;
  Interval ub = unit;
  if (length.lb() > 0.0) {
    ua = intersect(a.value_ / length, unit).value_or(unit);
    ub = intersect(b.value_ / length, unit).value_or(unit);
  }
  IntervalJet r;
  r.value_ = length;
  r.n_ = std::max(a.n_, b.n_);
  for (std::size_t i = 0; i < r.n_; ++i) {
    r.grad_[i] = ua * a.grad_[i] + ub * b.grad_[i];
  }
  return r;
}

}  // namespace ivalid
