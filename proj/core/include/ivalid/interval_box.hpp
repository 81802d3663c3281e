#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ivalid/interval.hpp"

namespace ivalid {

/// Cartesian product of one or more intervals. Never empty.
class IntervalBox {
 public:
  /// Throws std::invalid_argument for zero components.
  explicit IntervalBox(std::vector<Interval> components);
  IntervalBox(std::initializer_list<Interval> components);

  /// Degenerate box around a point.
  static IntervalBox point(std::span<const double> x);

  std::size_t dim() const { return components_.size(); }

  const Interval& operator[](std::size_t i) const { return components_[i]; }
  Interval& operator[](std::size_t i) { return components_[i]; }

  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  const std::vector<Interval>& components() const { return components_; }

  std::vector<double> midpoint() const;

  /// Throws std::invalid_argument on dimension mismatch.
  bool contains(std::span<const double> x) const;
  bool subset_of(const IntervalBox& other) const;

  /// Components [first, first + count).
  IntervalBox slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const IntervalBox&, const IntervalBox&) = default;

 private:
  std::vector<Interval> components_;
};

/// Product box (a × b), a's components first.
IntervalBox concat(const IntervalBox& a, const IntervalBox& b);

/// Component-wise sum; dimensions must match.
IntervalBox operator+(const IntervalBox& a, const IntervalBox& b);

/// Widest component among `dims` as (index, width); lowest index wins ties.
/// Throws std::invalid_argument when dims is empty or out of range.
std::pair<std::size_t, double> box_width(const IntervalBox& box,
                                         std::span<const std::size_t> dims);

/// Splits component `dim` at its midpoint. Throws std::invalid_argument when
/// that component cannot be split (zero width or a single ulp wide).
std::pair<IntervalBox, IntervalBox> bisect(const IntervalBox& box,
                                           std::size_t dim);

std::ostream& operator<<(std::ostream& os, const IntervalBox& box);

}  // namespace ivalid
