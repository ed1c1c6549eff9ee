#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fleetic::detail {

/// Uniform draws built directly from mt19937_64 bits, so sequences are
/// identical across standard library implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  /// [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// (0, 1)
  double open_uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// [0, n)
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  double exponential(double mean) { return -mean * std::log(open_uniform()); }

  double normal() {
    // Box-Muller, one value per call.
    const double r = std::sqrt(-2.0 * std::log(open_uniform()));
    return r * std::cos(6.283185307179586 * uniform());
  }

  /// Sequential inverse-transform Poisson. Means above 30 are split into a
  /// sum of independent draws to keep exp(-mean) well away from underflow.
  std::int64_t poisson(double mean) {
    std::int64_t total = 0;
    while (mean > 30.0) {
      total += poisson_small(30.0);
      mean -= 30.0;
    }
    return total + poisson_small(mean);
  }

 private:
  std::int64_t poisson_small(double mean) {
    if (mean <= 0.0) return 0;
    const double u = uniform();
    double p = std::exp(-mean);
    double cdf = p;
    std::int64_t k = 0;
    while (u > cdf && k < 1000) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
    }
    return k;
  }

  std::mt19937_64 engine_;
};

}  // namespace fleetic::detail
