#include "ivalid/error_objective.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace ivalid {

namespace {

void check_pair(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string("dimension mismatch: ") + what +
                                " (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

std::string_view to_string(InclusionForm form) {
  switch (form) {
    case InclusionForm::natural:
      return "natural";
    case InclusionForm::mean_value:
      return "mean_value";
  }
  return "unknown";
}

InclusionForm parse_inclusion_form(std::string_view name) {
  if (name == "natural") return InclusionForm::natural;
  if (name == "mean_value") return InclusionForm::mean_value;
  throw std::invalid_argument("unknown inclusion form '" + std::string(name) +
                              "' (expected natural or mean_value)");
}

ErrorObjective::ErrorObjective(
    std::shared_ptr<const ObservationModel> observation,
    std::shared_ptr<const EstimatorModel> estimator, IntervalBox param_box,
    IntervalBox noise_box, InclusionForm form, std::size_t noise_splits)
    : observation_(std::move(observation)),
      estimator_(std::move(estimator)),
      param_box_(std::move(param_box)),
      noise_box_(std::move(noise_box)),
      form_(form),
      noise_splits_(noise_splits) {
  if (!observation_ || !estimator_) {
    throw std::invalid_argument("ErrorObjective: null model");
  }
  if (noise_splits_ == 0) throw std::invalid_argument("noise_splits must be >= 1");
  check_pair(observation_->param_dim(), param_box_.dim(),
             "observation input vs param_box");
  check_pair(observation_->obs_dim(), noise_box_.dim(),
             "observation output vs noise_box");
  check_pair(estimator_->obs_dim(), observation_->obs_dim(),
             "estimator input vs observation output");
  check_pair(estimator_->param_dim(), param_box_.dim(),
             "estimator output vs param_box");
}

IntervalBox ErrorObjective::search_box() const {
  return concat(param_box_, noise_box_);
}

std::vector<std::size_t> ErrorObjective::split_dims() const {
  std::vector<std::size_t> dims(param_dim());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = i;
  return dims;
}

std::vector<double> ErrorObjective::observe(std::span<const double> x,
                                            std::span<const double> e) const {
  check_pair(x.size(), param_dim(), "x vs param_box");
  check_pair(e.size(), noise_dim(), "e vs noise_box");
  std::vector<double> y = observation_->eval_point(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += e[i];
  return y;
}

double ErrorObjective::error_point(std::span<const double> x,
                                   std::span<const double> e) const {
  const std::vector<double> estimate = estimator_->eval_point(observe(x, e));
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - estimate[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

IntervalBox ErrorObjective::residual_natural(const IntervalBox& x,
                                             const IntervalBox& e) const {
  check_pair(x.dim(), param_dim(), "X vs param_box");
  check_pair(e.dim(), noise_dim(), "E vs noise_box");
  const IntervalBox estimate =
      estimator_->eval_box(observation_->eval_box(x) + e);
  std::vector<Interval> r;
  r.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) r.push_back(x[i] - estimate[i]);
  return IntervalBox(std::move(r));
}

Interval ErrorObjective::error_box(const IntervalBox& x,
                                   const IntervalBox& e) const {
  return euclidean_norm(residual_natural(x, e));
}

Interval ErrorObjective::error_box_mean_value(const IntervalBox& x,
                                              const IntervalBox& e) const {
  IntervalBox residual = residual_natural(x, e);
  const std::size_t n = x.dim();
  const std::size_t m = e.dim();
  if (n > kMaxTangents) return euclidean_norm(residual);
  // Seed the noise directions too when they fit: E is never split, so its
  // whole width goes through the estimator on every box.
  const bool with_noise = n + m <= kMaxTangents;
  const std::size_t tangents = with_noise ? n + m : n;

  // Jacobian of r(x, e) = x - psi(g(x) + e) over X x E.
  std::vector<IntervalJet> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(IntervalJet::variable(x[i], tangents, i));
  }
  auto ys = observation_->eval_jet(xs);
  if (!ys) return euclidean_norm(residual);
  for (std::size_t k = 0; k < m; ++k) {
    (*ys)[k] = (*ys)[k] + (with_noise ? IntervalJet::variable(e[k], tangents, n + k)
                                      : IntervalJet(e[k], 0));
  }
  const auto estimate = estimator_->eval_jet(*ys);
  if (!estimate) return euclidean_norm(residual);

  // Centre term evaluated naturally at the midpoint (of X, or of X x E).
  const std::vector<double> c = x.midpoint();
  const std::vector<double> ce = e.midpoint();
  const IntervalBox centre =
      residual_natural(IntervalBox::point(c), with_noise ? IntervalBox::point(ce) : e);

  for (std::size_t i = 0; i < n; ++i) {
    Interval mv = centre[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Interval dij =
          (i == j ? Interval::point(1.0) : Interval()) - (*estimate)[i].grad(j);
      mv += dij * (x[j] - c[j]);
    }
    if (with_noise) {
      for (std::size_t k = 0; k < m; ++k) {
        mv -= (*estimate)[i].grad(n + k) * (e[k] - ce[k]);
      }
    }
    // Both enclose r_i over X x E, so they always overlap.
    if (auto both = intersect(residual[i], mv)) residual[i] = *both;
  }
  return euclidean_norm(residual);
}

Interval ErrorObjective::error_enclosure(const IntervalBox& x,
                                         const IntervalBox& e) const {
  const auto one = [&](const IntervalBox& piece) {
    return form_ == InclusionForm::mean_value ? error_box_mean_value(x, piece)
                                              : error_box(x, piece);
  };
  if (noise_splits_ == 1) return one(e);

  const std::size_t k = noise_splits_;
  const auto cut = [k](const Interval& c, std::size_t j) {
    if (j == 0) return c.lb();
    if (j == k) return c.ub();
    return std::fmin(c.ub(), c.lb() + (c.ub() - c.lb()) * static_cast<double>(j) /
                                          static_cast<double>(k));
  };
  std::vector<std::size_t> index(e.dim(), 0);
  std::vector<Interval> parts(e.begin(), e.end());
  std::optional<Interval> result;
  for (;;) {
    for (std::size_t d = 0; d < e.dim(); ++d) {
      parts[d] = Interval(cut(e[d], index[d]), cut(e[d], index[d] + 1));
    }
    const Interval r = one(IntervalBox(parts));
    result = result ? hull(*result, r) : r;
    std::size_t d = 0;
    while (d < e.dim() && ++index[d] == k) index[d++] = 0;
    if (d == e.dim()) break;
  }
  return *result;
}

Interval ErrorObjective::objective_box(const IntervalBox& b) const {
  check_pair(b.dim(), param_dim() + noise_dim(), "search box vs X0 x E");
  return -error_enclosure(b.slice(0, param_dim()),
                          b.slice(param_dim(), noise_dim()));
}

double ErrorObjective::objective_point(std::span<const double> p) const {
  check_pair(p.size(), param_dim() + noise_dim(), "search point vs X0 x E");
  return -error_point(p.first(param_dim()), p.subspan(param_dim()));
}

Interval euclidean_norm(const IntervalBox& residual) {
  Interval sum = sqr(residual[0]);
  for (std::size_t i = 1; i < residual.dim(); ++i) sum += sqr(residual[i]);
  return sqrt(sum);
}

}  // namespace ivalid
