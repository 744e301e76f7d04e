#include "framekit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "framekit/error.hpp"
#include "framekit/random.hpp"

namespace framekit {

namespace {

constexpr int kMaxSweeps = 100;

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

// Gradient of the p-norm at y, scaled to unit dual norm.
Vector dual_direction(std::span<const double> y, double p) {
  const double n = vector_p_norm(y, p);
  Vector d(y.size(), 0.0);
  if (n == 0.0) return d;
  for (std::size_t i = 0; i < y.size(); ++i) {
    d[i] = sign_of(y[i]) * std::pow(std::abs(y[i]) / n, p - 1.0);
  }
  return d;
}

double ratio(const Matrix& m, std::span<const double> v, double p) {
  const double nv = vector_p_norm(v, p);
  return nv == 0.0 ? 0.0 : vector_p_norm(m * v, p) / nv;
}

}  // namespace

void require_exponent(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw InvalidExponent("exponent must lie in [1, inf], got " + std::to_string(p));
  }
}

double defect(const Matrix& m, const Matrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) {
    throw DimensionMismatch("defect: shapes " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " and " + std::to_string(n.rows()) + "x" +
                            std::to_string(n.cols()));
  }
  return defect(m.entries(), n.entries());
}

double defect(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionMismatch("defect: vector lengths differ");
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

double vector_p_norm(std::span<const double> v, double p) {
  require_exponent(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  // Scale by the largest entry to avoid overflow/underflow in |x|^p.
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

std::vector<double> singular_values(const Matrix& m) {
  // Work on the orientation with at least as many rows as columns.
  Matrix u = m.rows() >= m.cols() ? m : m.transpose();
  const std::size_t rows = u.rows();
  const std::size_t cols = u.cols();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < cols; ++i) {
      for (std::size_t j = i + 1; j < cols; ++j) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += u(k, i) * u(k, i);
          beta += u(k, j) * u(k, j);
          gamma += u(k, i) * u(k, j);
        }
        if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = sign_of(zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t k = 0; k < rows; ++k) {
          const double ui = u(k, i);
          const double uj = u(k, j);
          u(k, i) = c * ui - s * uj;
          u(k, j) = s * ui + c * uj;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += u(k, j) * u(k, j);
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

std::size_t numerical_rank(const Matrix& m, double rel_threshold) {
  const auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = rel_threshold * sv.front();
  return static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

double condition_number(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("condition number of non-square matrix");
  if (m.rows() == 0) return 1.0;
  const auto sv = singular_values(m);
  if (sv.back() == 0.0) return kInfinity;
  return std::max(1.0, sv.front() / sv.back());
}

InversionResult invert(const Matrix& m, double cond_limit) {
  if (!m.is_square()) throw DimensionMismatch("invert: matrix is not square");
  if (!(cond_limit >= 1.0)) throw InvalidArgument("invert: cond_limit must be >= 1");
  const std::size_t n = m.rows();
  const double cond = condition_number(m);
  if (!(cond <= cond_limit)) {
    throw NotInvertible("condition estimate " + std::to_string(cond) + " exceeds limit " +
                            std::to_string(cond_limit),
                        cond);
  }

  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (a(piv, k) == 0.0) throw NotInvertible("zero pivot in elimination", cond);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    const double d = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = a(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return {std::move(inv), cond};
}

SymmetricEigen symmetric_eigen(const Matrix& m) {
  if (!m.is_square()) throw NotSymmetric("symmetric_eigen: matrix is not square");
  const std::size_t n = m.rows();
  const double sym_tol = 1e-12 * std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > sym_tol) throw NotSymmetric("matrix is not symmetric");

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  double frob = 0.0;
  for (double x : a.entries()) frob += x * x;
  frob = std::sqrt(frob);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= 1e-15 * frob) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = sign_of(theta) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p);
            const double arq = a(r, q);
            a(r, p) = a(p, r) = c * arp - s * arq;
            a(r, q) = a(q, r) = s * arp + c * arq;
          }
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m) { return symmetric_eigen(m).values; }

double estimate_operator_p_norm(const Matrix& m, double p, int samples, std::uint64_t seed) {
  require_exponent(p);
  if (samples < 1) throw InvalidArgument("estimate_operator_p_norm: samples must be >= 1");
  if (m.rows() == 0 || m.cols() == 0) return 0.0;

  if (p == 1.0) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
      best = std::max(best, s);
    }
    return best;
  }
  if (std::isinf(p)) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
      best = std::max(best, s);
    }
    return best;
  }
  if (p == 2.0) return singular_values(m).front();

  const double p_dual = p / (p - 1.0);
  const Matrix mt = m.transpose();
  double best = 0.0;

  auto refine = [&](Vector x) {
    const double nx = vector_p_norm(x, p);
    if (nx == 0.0) return;
    for (double& v : x) v /= nx;
    for (int it = 0; it < 200; ++it) {
      const Vector y = m * x;
      best = std::max(best, vector_p_norm(y, p));
      const Vector z = mt * dual_direction(y, p);
      if (vector_p_norm(z, p_dual) == 0.0) return;
      Vector next = dual_direction(z, p_dual);
      if (defect(next, x) < 1e-15) return;
      x = std::move(next);
    }
  };

  for (std::size_t j = 0; j < m.cols(); ++j) {
    best = std::max(best, ratio(m, unit_vector(m.cols(), j), p));
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) refine(rng.vector(m.cols()));
  return best;
}

std::vector<std::size_t> pivot_columns(const Matrix& m, double rel_threshold, std::size_t& rank) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> perm(cols);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const double cut = rel_threshold * a.max_abs();
  rank = 0;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pi = k, pj = k;
    double best = -1.0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pi = i;
          pj = j;
        }
    if (best <= cut || best == 0.0) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(k, j), a(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, k), a(i, pj));
    std::swap(perm[k], perm[pj]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < cols; ++j) a(i, j) -= f * a(k, j);
    }
    ++rank;
  }
  return perm;
}

Matrix left_inverse(const Matrix& w, double cond_limit) {
  const Matrix wt = w.transpose();
  return invert(wt * w, cond_limit).inverse * wt;
}

}  // namespace framekit
