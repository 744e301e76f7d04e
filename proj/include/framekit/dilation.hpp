#pragma once

#include <cstddef>

#include "framekit/linalg.hpp"
#include "framekit/pasf.hpp"
#include "framekit/report.hpp"

namespace framekit {

/// An element x (+) y of X (+) R^n. Elements of the dilated space X1 have y
/// in the complement range(I - P_{f,tau}).
struct SumElement {
  Vector x;
  Vector y;
};

/// The dilation of a p-ASF (f, tau) to a p-approximate Riesz basis (g, omega)
/// of X1 = X (+) (I - P)(R^n), where P = P_{f,tau} = F S^{-1} T.
///
/// omega_k = tau_k (+) (I - P) e_k and g_k = f_k (+) zeta_k (I - P), where
/// zeta_k reads the k-th coordinate. Operators on X1 are written in the basis
/// {(e_j, 0)} followed by {(0, w) : w a column of the complement basis}.
struct DilationBundle {
  FramePair base;
  /// W, n x (n - d): columns span range(I - P).
  Matrix complement_basis;
  /// d x n; column k is the X-part of omega_k (= tau_k).
  Matrix omega_x;
  /// n x n; column k is the sequence part (I - P) e_k of omega_k. As a
  /// matrix this is I - P itself.
  Matrix omega_y;
  /// n x (d + n); row k is g_k acting on the stacked vector (x; y).
  Matrix g;
  /// S_{g,omega} on X1 in the basis above, assembled as S_{f,tau} (+) I.
  Matrix s_g_omega;

  std::size_t space_dim() const noexcept { return base.space_dim(); }
  std::size_t seq_dim() const noexcept { return base.seq_dim(); }
  std::size_t complement_dim() const noexcept { return complement_basis.cols(); }
  std::size_t dilated_dim() const noexcept { return space_dim() + complement_dim(); }
  /// n == d: the complement is {0} and X1 = X.
  bool degenerate() const noexcept { return complement_dim() == 0; }

  const Matrix& complement_projector() const noexcept { return omega_y; }
  SumElement omega(std::size_t k) const;
  /// g_k(x (+) y).
  double apply_g(std::size_t k, const SumElement& xi) const;
};

/// Builds the dilation. Throws NotInvertible if S_{f,tau} is singular and
/// MathError if the numerical rank of I - P differs from n - d.
DilationBundle dilate(const FramePair& pair, double cond_limit = kDefaultCondLimit);

/// Reassembles theta_g, theta_omega and S_{g,omega} from the definitions of
/// g_k and omega_k and reports every identity of the construction:
///   restriction_f, restriction_tau, zero_sum_1, zero_sum_2, block_S,
///   riesz_identity, isometry
/// plus structural checks on the complement. Thresholds are `tolerance`
/// except isometry, which must be exactly 0.
VerificationReport verify_dilation(const DilationBundle& bundle,
                                   double tolerance = kDefaultTolerance,
                                   double cond_limit = kDefaultCondLimit);

/// P(x (+) y) = x. Throws NotInComplement if (I - P) y != y within tolerance.
Vector compress(const DilationBundle& bundle, const SumElement& xi,
                double tolerance = kDefaultTolerance);

/// (||x||_q^p + ||y||_p^p)^(1/p), or the max of the two for p = inf.
double direct_sum_norm(const DilationBundle& bundle, const SumElement& xi,
                       double tolerance = kDefaultTolerance);

/// J = diag(I_d, W): basis coordinates of X1 -> ambient (x; y).
Matrix embedding_matrix(const DilationBundle& bundle);
/// diag(I_d, W^+): ambient (x; y) with y in the complement -> coordinates.
Matrix coordinate_matrix(const DilationBundle& bundle, double cond_limit = kDefaultCondLimit);

/// The dilated pair (g, omega) written as a FramePair on R^n in the basis of
/// X1; exponents p = q = base.p().
FramePair dilated_pair(const DilationBundle& bundle, double cond_limit = kDefaultCondLimit);

}  // namespace framekit
