#pragma once

#include <cstdint>
#include <random>

namespace ivalid {

/// Portable uniform sampler: std::mt19937_64 (fully specified by the
/// standard) with an explicit 53-bit conversion, so sequences are identical
/// on every platform for a given seed.
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

  /// Uniform in [lo, hi]; returns lo when lo == hi.
  double uniform(double lo, double hi) {
    const double v = lo + unit() * (hi - lo);
    return v > hi ? hi : v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ivalid
