#include "ivalid/interval_box.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace ivalid {

namespace {

void require_dim(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(expected) + " vs " +
                                std::to_string(actual) + ")");
  }
}

}  // namespace

IntervalBox::IntervalBox(std::vector<Interval> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("interval box needs at least one component");
  }
}

IntervalBox::IntervalBox(std::initializer_list<Interval> components)
    : IntervalBox(std::vector<Interval>(components)) {}

IntervalBox IntervalBox::point(std::span<const double> x) {
  std::vector<Interval> c;
  c.reserve(x.size());
  for (double v : x) c.push_back(Interval::point(v));
  return IntervalBox(std::move(c));
}

std::vector<double> IntervalBox::midpoint() const {
  std::vector<double> m;
  m.reserve(dim());
  for (const auto& c : components_) m.push_back(c.mid());
  return m;
}

bool IntervalBox::contains(std::span<const double> x) const {
  require_dim(dim(), x.size(), "IntervalBox::contains");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!components_[i].contains(x[i])) return false;
  }
  return true;
}

bool IntervalBox::subset_of(const IntervalBox& other) const {
  require_dim(dim(), other.dim(), "IntervalBox::subset_of");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!components_[i].subset_of(other.components_[i])) return false;
  }
  return true;
}

IntervalBox IntervalBox::slice(std::size_t first, std::size_t count) const {
  if (first + count > dim() || count == 0) {
    throw std::invalid_argument("IntervalBox::slice out of range");
  }
  return IntervalBox(std::vector<Interval>(components_.begin() + first,
                                           components_.begin() + first + count));
}

IntervalBox concat(const IntervalBox& a, const IntervalBox& b) {
  std::vector<Interval> c(a.begin(), a.end());
  c.insert(c.end(), b.begin(), b.end());
  return IntervalBox(std::move(c));
}

IntervalBox operator+(const IntervalBox& a, const IntervalBox& b) {
  require_dim(a.dim(), b.dim(), "IntervalBox sum");
  std::vector<Interval> c;
  c.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] + b[i]);
  return IntervalBox(std::move(c));
}

std::pair<std::size_t, double> box_width(const IntervalBox& box,
                                         std::span<const std::size_t> dims) {
  if (dims.empty()) throw std::invalid_argument("box_width: empty dimension set");
  std::size_t best = dims.size();
  double best_width = -1.0;
  for (std::size_t d : dims) {
    if (d >= box.dim()) throw std::invalid_argument("box_width: index out of range");
    const double w = box[d].width();
    if (w > best_width || (w == best_width && d < best)) {
      best = d;
      best_width = w;
    }
  }
  return {best, best_width};
}

std::pair<IntervalBox, IntervalBox> bisect(const IntervalBox& box,
                                           std::size_t dim) {
  if (dim >= box.dim()) throw std::invalid_argument("bisect: index out of range");
  const Interval& c = box[dim];
  if (!c.splittable()) {
    throw std::invalid_argument("bisect: component " + std::to_string(dim) +
                                " is degenerate");
  }
  const double m = c.mid();
  IntervalBox lower = box;
  IntervalBox upper = box;
  lower[dim] = Interval(c.lb(), m);
  upper[dim] = Interval(m, c.ub());
  return {std::move(lower), std::move(upper)};
}

std::ostream& operator<<(std::ostream& os, const IntervalBox& box) {
  os << '(';
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (i) os << " x ";
    os << box[i];
  }
  return os << ')';
}

}  // namespace ivalid
