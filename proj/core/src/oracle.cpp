#include "ivalid/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ivalid/random.hpp"

namespace ivalid {

std::string_view to_string(SamplingMode mode) {
  return mode == SamplingMode::random ? "random" : "grid";
}

SamplingMode parse_sampling_mode(std::string_view name) {
  if (name == "random") return SamplingMode::random;
  if (name == "grid") return SamplingMode::grid;
  throw std::invalid_argument("unknown oracle mode '" + std::string(name) +
                              "' (expected random or grid)");
}

namespace {

void consider(const ErrorObjective& objective, std::span<const double> point,
              OracleResult& best) {
  const std::size_t n = objective.param_dim();
  const auto x = point.first(n);
  const auto e = point.subspan(n);
  ++best.samples_used;
  // The float error_point can overshoot the exact error by a few ulps; the
  // lower end of the point-box enclosure cannot. The float value only
  // screens out samples that cannot raise the maximum.
  if (best.samples_used > 1 && objective.error_point(x, e) < best.max_observed) return;
  const double err = objective.error_box(IntervalBox::point(x), IntervalBox::point(e)).lb();
  if (best.samples_used == 1 || err > best.max_observed) {
    best.max_observed = err;
    best.argmax_x.assign(x.begin(), x.end());
    best.argmax_e.assign(e.begin(), e.end());
  }
}

std::size_t grid_points_per_axis(std::size_t samples, std::size_t dims) {
  auto k = static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(samples), 1.0 / static_cast<double>(dims)) +
                 1e-9));
  while (k > 2 && std::pow(static_cast<double>(k), static_cast<double>(dims)) >
                      static_cast<double>(samples) + 0.5) {
    --k;
  }
  return std::max<std::size_t>(k, 2);
}

}  // namespace

OracleResult sample_max_error(const ErrorObjective& objective,
                              const OracleConfig& config) {
  if (config.samples == 0) throw std::invalid_argument("oracle needs at least one sample");
  const IntervalBox domain = objective.search_box();
  const std::size_t d = domain.dim();
  OracleResult best;
  std::vector<double> point(d);

  if (config.mode == SamplingMode::random) {
    UniformSampler rng(config.seed);
    for (std::size_t s = 0; s < config.samples; ++s) {
      for (std::size_t i = 0; i < d; ++i) point[i] = rng.uniform(domain[i].lb(), domain[i].ub());
      consider(objective, point, best);
    }
    return best;
  }

  const std::size_t k = grid_points_per_axis(config.samples, d);
  std::vector<std::size_t> index(d, 0);
  for (;;) {
    for (std::size_t i = 0; i < d; ++i) {
      const Interval& c = domain[i];
      if (index[i] == 0) {
        point[i] = c.lb();
      } else if (index[i] == k - 1) {
        point[i] = c.ub();
      } else {
        const double t = static_cast<double>(index[i]) / static_cast<double>(k - 1);
        point[i] = std::min(c.ub(), c.lb() + t * (c.ub() - c.lb()));
      }
    }
    consider(objective, point, best);
    std::size_t i = 0;
    while (i < d && ++index[i] == k) index[i++] = 0;
    if (i == d) break;
  }
  return best;
}

bool certify(double report_upper, const OracleResult& oracle) {
  return oracle.max_observed <=
         std::nextafter(report_upper, std::numeric_limits<double>::infinity());
}

}  // namespace ivalid
