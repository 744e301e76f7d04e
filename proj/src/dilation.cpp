#include "framekit/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "framekit/error.hpp"

namespace framekit {

namespace {

// Basis element j of X1: (e_j, 0) for j < d, else (0, w_{j-d}).
SumElement basis_element(const DilationBundle& b, std::size_t j) {
  const std::size_t d = b.space_dim();
  if (j < d) return {unit_vector(d, j), Vector(b.seq_dim(), 0.0)};
  return {Vector(d, 0.0), b.complement_basis.col(j - d)};
}

Vector to_coordinates(const SumElement& xi, const Matrix& w_pinv) {
  Vector c = xi.x;
  const Vector cy = w_pinv * xi.y;
  c.insert(c.end(), cy.begin(), cy.end());
  return c;
}

// S_{g,omega} b_j = sum_k g_k(b_j) omega_k, summed term by term.
Matrix assemble_s_g_omega(const DilationBundle& b, const Matrix& w_pinv) {
  const std::size_t dim = b.dilated_dim();
  Matrix s(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const SumElement bj = basis_element(b, j);
    SumElement acc{Vector(b.space_dim(), 0.0), Vector(b.seq_dim(), 0.0)};
    for (std::size_t k = 0; k < b.seq_dim(); ++k) {
      const double gk = b.apply_g(k, bj);
      const SumElement wk = b.omega(k);
      acc.x = axpy(gk, wk.x, acc.x);
      acc.y = axpy(gk, wk.y, acc.y);
    }
    s.set_col(j, to_coordinates(acc, w_pinv));
  }
  return s;
}

// Row k: g_k evaluated on the basis of X1 (theta_g in coordinates).
Matrix assemble_theta_g(const DilationBundle& b) {
  const std::size_t dim = b.dilated_dim();
  Matrix m(b.seq_dim(), dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const SumElement bj = basis_element(b, j);
    for (std::size_t k = 0; k < b.seq_dim(); ++k) m(k, j) = b.apply_g(k, bj);
  }
  return m;
}

// Column k: coordinates of omega_k (theta_omega in coordinates).
Matrix assemble_theta_omega(const DilationBundle& b, const Matrix& w_pinv) {
  Matrix m(b.dilated_dim(), b.seq_dim());
  for (std::size_t k = 0; k < b.seq_dim(); ++k) m.set_col(k, to_coordinates(b.omega(k), w_pinv));
  return m;
}

void require_shape(const DilationBundle& b, const SumElement& xi) {
  if (xi.x.size() != b.space_dim() || xi.y.size() != b.seq_dim()) {
    throw DimensionMismatch("element of X (+) R^n must have parts of size d and n");
  }
}

void require_in_complement(const DilationBundle& b, const SumElement& xi, double tolerance) {
  require_shape(b, xi);
  const double dev = defect(b.complement_projector() * xi.y, xi.y);
  if (!(dev <= tolerance)) {
    throw NotInComplement("sequence part is not in range(I - P): defect " + std::to_string(dev));
  }
}

}  // namespace

SumElement DilationBundle::omega(std::size_t k) const {
  return {omega_x.col(k), omega_y.col(k)};
}

double DilationBundle::apply_g(std::size_t k, const SumElement& xi) const {
  const std::size_t d = space_dim();
  double s = 0.0;
  for (std::size_t j = 0; j < d; ++j) s += g(k, j) * xi.x[j];
  for (std::size_t i = 0; i < seq_dim(); ++i) s += g(k, d + i) * xi.y[i];
  return s;
}

DilationBundle dilate(const FramePair& pair, double cond_limit) {
  const std::size_t d = pair.space_dim();
  const std::size_t n = pair.seq_dim();
  const Matrix s = frame_operator(pair);
  const Matrix s_inv = invert(s, cond_limit).inverse;
  const Matrix p = pair.functionals() * (s_inv * pair.vectors());
  // n == d: rank(P) = n forces P = I, so the complement is exactly {0}.
  const Matrix q = n == d ? Matrix(n, n) : Matrix::identity(n) - p;

  std::size_t rank = 0;
  const auto perm = pivot_columns(q, kRankThreshold, rank);
  if (rank != n - d) {
    throw MathError("complement I - P has numerical rank " + std::to_string(rank) +
                    ", expected " + std::to_string(n - d));
  }
  std::vector<std::size_t> chosen(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(rank));
  std::sort(chosen.begin(), chosen.end());

  DilationBundle b{pair,
                   q.select_columns(chosen),
                   pair.vectors(),
                   q,
                   hstack(pair.functionals(), q),
                   block_diag(s, Matrix::identity(n - d))};
  return b;
}

Matrix embedding_matrix(const DilationBundle& bundle) {
  return block_diag(Matrix::identity(bundle.space_dim()), bundle.complement_basis);
}

Matrix coordinate_matrix(const DilationBundle& bundle, double cond_limit) {
  return block_diag(Matrix::identity(bundle.space_dim()),
                    left_inverse(bundle.complement_basis, cond_limit));
}

Vector compress(const DilationBundle& bundle, const SumElement& xi, double tolerance) {
  require_in_complement(bundle, xi, tolerance);
  return xi.x;
}

double direct_sum_norm(const DilationBundle& bundle, const SumElement& xi, double tolerance) {
  require_in_complement(bundle, xi, tolerance);
  const double p = bundle.base.p();
  const double a = vector_p_norm(xi.x, bundle.base.q());
  const double b = vector_p_norm(xi.y, p);
  const double m = std::max(a, b);
  if (std::isinf(p) || m == 0.0) return m;
  // Normalized so that b == 0 returns a exactly.
  return m * std::pow(std::pow(a / m, p) + std::pow(b / m, p), 1.0 / p);
}

FramePair dilated_pair(const DilationBundle& bundle, double cond_limit) {
  const Matrix w_pinv = left_inverse(bundle.complement_basis, cond_limit);
  return FramePair(assemble_theta_g(bundle), assemble_theta_omega(bundle, w_pinv),
                   bundle.base.p(), bundle.base.p());
}

VerificationReport verify_dilation(const DilationBundle& bundle, double tolerance,
                                   double cond_limit) {
  const FramePair& pair = bundle.base;
  const std::size_t d = bundle.space_dim();
  const std::size_t n = bundle.seq_dim();
  const Matrix& f = pair.functionals();
  const Matrix& t = pair.vectors();
  const Matrix& q = bundle.complement_projector();
  const Matrix& w = bundle.complement_basis;
  VerificationReport r;

  r.add("complement_dim", std::abs(static_cast<double>(bundle.dilated_dim()) - static_cast<double>(n)), 0.0);
  r.add("complement_rank",
        std::abs(static_cast<double>(w.cols() == 0 ? 0 : numerical_rank(w)) -
                 static_cast<double>(n - d)),
        0.0);
  r.add("complement_invariant", w.cols() == 0 ? 0.0 : defect(q * w, w), tolerance);
  r.add("omega_in_complement", defect(q * bundle.omega_y, bundle.omega_y), tolerance);

  // (a) g_k restricted to X equals f_k.
  double restriction_f = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const SumElement probe{unit_vector(d, j), Vector(n, 0.0)};
    for (std::size_t k = 0; k < n; ++k) {
      restriction_f = std::max(restriction_f, std::abs(bundle.apply_g(k, probe) - f(k, j)));
    }
  }
  r.add("restriction_f", restriction_f, tolerance);

  // (b) P omega_k = tau_k.
  double restriction_tau = 0.0;
  try {
    for (std::size_t k = 0; k < n; ++k) {
      const Vector pk = compress(bundle, bundle.omega(k), tolerance);
      restriction_tau = std::max(restriction_tau, defect(pk, t.col(k)));
    }
  } catch (const NotInComplement&) {
    restriction_tau = kInfinity;
  }
  r.add("restriction_tau", restriction_tau, tolerance);

  // (c) sum_k zeta_k((I - P) y) tau_k = T (I - P) y = 0.
  r.add("zero_sum_1", (t * q).max_abs(), tolerance);
  // (d) sum_k f_k(x) (I - P) e_k = (I - P) F x = 0.
  r.add("zero_sum_2", (q * f).max_abs(), tolerance);

  Matrix w_pinv;
  try {
    w_pinv = left_inverse(w, cond_limit);
  } catch (const NotInvertible&) {
    r.add("block_S", kInfinity, tolerance);
    r.add("riesz_identity", kInfinity, tolerance);
    return r;
  }

  // (e) S_{g,omega} = S_{f,tau} (+) I.
  const Matrix s_raw = assemble_s_g_omega(bundle, w_pinv);
  const Matrix s_block = block_diag(frame_operator(pair), Matrix::identity(n - d));
  const double stored = bundle.s_g_omega.rows() == s_block.rows() &&
                                bundle.s_g_omega.cols() == s_block.cols()
                            ? defect(bundle.s_g_omega, s_block)
                            : kInfinity;
  r.add("block_S", std::max(defect(s_raw, s_block), stored), tolerance);

  // (f) P_{g,omega} = theta_g S_{g,omega}^{-1} theta_omega = I_n.
  double riesz_identity = kInfinity;
  try {
    const Matrix s_inv = invert(s_raw, cond_limit).inverse;
    const Matrix p_g_omega = assemble_theta_g(bundle) * (s_inv * assemble_theta_omega(bundle, w_pinv));
    riesz_identity = defect(p_g_omega, Matrix::identity(n));
  } catch (const NotInvertible&) {
  }
  r.add("riesz_identity", riesz_identity, tolerance);

  // (g) ||x (+) 0|| = ||x||: the embedding of X is isometric.
  double isometry = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    Vector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (i == j ? 1.0 : 0.0) + 0.25 * static_cast<double>(i + 1);
    for (const Vector& probe : {unit_vector(d, j), x}) {
      const double lhs = direct_sum_norm(bundle, {probe, Vector(n, 0.0)});
      isometry = std::max(isometry, std::abs(lhs - vector_p_norm(probe, pair.q())));
    }
  }
  r.add("isometry", isometry, 0.0);
  return r;
}

}  // namespace framekit
