#pragma once

#include <cstdint>
#include <random>

#include "holonum/types.hpp"

namespace holonum {

/// Deterministic random source. Draws go through explicit helpers rather than
/// std distributions so that a given seed yields the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  double uniform01() {
    // 53-bit mantissa draw in [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  cplx complex_in_box(double half_side) {
    return {uniform(-half_side, half_side), uniform(-half_side, half_side)};
  }

  /// Uniform point of the open disc |z| < radius.
  cplx complex_in_disc(double radius) {
    double r = radius * std::sqrt(uniform01());
    double t = uniform(0.0, 2.0 * 3.14159265358979323846);
    return std::polar(r, t);
  }

  cplx unit_complex() { return std::polar(1.0, uniform(0.0, 2.0 * 3.14159265358979323846)); }

  /// Standard complex Gaussian (Box-Muller).
  cplx gaussian() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    double v = uniform01();
    double m = std::sqrt(-2.0 * std::log(u));
    return {m * std::cos(2.0 * 3.14159265358979323846 * v),
            m * std::sin(2.0 * 3.14159265358979323846 * v)};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace holonum
