#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivalid/interval_box.hpp"
#include "json.hpp"

namespace ivalid::detail {

inline double finite_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw std::invalid_argument(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw std::invalid_argument(where + ": expected a finite number");
  return v;
}

inline std::uint64_t count(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    if (j.is_number_float()) {
      const double v = j.get<double>();
      if (v >= 0.0 && v == std::floor(v) && v < 1.8e19) return static_cast<std::uint64_t>(v);
    }
    throw std::invalid_argument(where + ": expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

/// [[lb, ub], ...]
inline IntervalBox parse_box(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(where + ": expected [[lb, ub], ...]");
  std::vector<Interval> c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw std::invalid_argument(at + ": expected [lb, ub]");
    const double lb = finite_number(j[i][0], at);
    const double ub = finite_number(j[i][1], at);
    if (lb > ub) throw std::invalid_argument(at + ": lower bound exceeds upper bound");
    c.emplace_back(lb, ub);
  }
  return IntervalBox(std::move(c));
}

inline nlohmann::json box_to_json(const IntervalBox& box) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : box) out.push_back({c.lb(), c.ub()});
  return out;
}

}  // namespace ivalid::detail
