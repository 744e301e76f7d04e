#pragma once

#include <cstdint>
#include <random>

#include "framekit/matrix.hpp"

namespace framekit {

/// Seeded generator with a portable uniform mapping (53 random bits per
/// double), so seeds reproduce bit-for-bit across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

  Matrix matrix(std::size_t rows, std::size_t cols, double lo = -1.0, double hi = 1.0) {
    Matrix m(rows, cols);
    for (double& v : m.entries()) v = uniform(lo, hi);
    return m;
  }

  Vector vector(std::size_t dim, double lo = -1.0, double hi = 1.0) {
    Vector v(dim);
    for (double& x : v) x = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace framekit
