#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace support {

inline double rel_err(double computed, double expected) {
  return expected == 0.0 ? std::fabs(computed) : std::fabs(computed - expected) / std::fabs(expected);
}

/// Deterministic input generator for property tests. The engine sequence is
/// fixed by the standard and the mapping to reals is done here, so samples
/// are identical on every platform.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  unsigned integer(unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(engine_() % (static_cast<std::uint64_t>(hi - lo) + 1));
  }

  std::vector<double> uniforms(std::size_t count, double lo, double hi) {
    std::vector<double> out(count);
    for (double& v : out) v = uniform(lo, hi);
    return out;
  }

private:
  std::mt19937_64 engine_;
};

inline std::vector<double> linspace(double a, double b, std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = count == 1 ? a
                       : (a * static_cast<double>(count - 1 - i) + b * static_cast<double>(i)) /
                             static_cast<double>(count - 1);
  }
  return xs;
}

template <class F>
double central_difference(F f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

} // namespace support
