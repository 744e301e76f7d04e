#pragma once

#include <vector>

#include "framekit/dilation.hpp"
#include "framekit/linalg.hpp"
#include "framekit/pasf.hpp"
#include "framekit/report.hpp"

namespace framekit {

/// A finite sequence of vectors in R^d (columns of a d x n matrix) with the
/// functionals f_k = <., tau_k>.
struct HilbertFrame {
  Matrix vectors;

  std::size_t space_dim() const noexcept { return vectors.rows(); }
  std::size_t seq_dim() const noexcept { return vectors.cols(); }
  /// F = T^T, p = q = 2.
  FramePair pair() const { return FramePair::hilbert(vectors); }
};

/// Optimal frame bounds: extreme eigenvalues of S = T T^T.
struct FrameBounds {
  double a;
  double b;
};

struct ClassifiedFrame {
  HilbertFrame frame;
  PasfClassification classification;
};

/// Rank deficiency surfaces as NOT_PASF, never as an exception.
ClassifiedFrame frame_from_vectors(const Matrix& vectors, double cond_limit = kDefaultCondLimit,
                                   double tolerance = kDefaultTolerance);

/// Throws NotAFrame if rank(T) < d.
FrameBounds frame_bounds(const HilbertFrame& frame);

/// Defects for the fundamental frame identities: S symmetric positive
/// definite, both Fourier expansions, theta^* = synthesis, S = theta^* theta,
/// and P = theta S^{-1} theta^* an orthogonal projection onto range(theta).
VerificationReport hilbert_fundamentals(const HilbertFrame& frame,
                                        double tolerance = kDefaultTolerance,
                                        double cond_limit = kDefaultCondLimit);

struct NaimarkDilation {
  DilationBundle bundle;
  VerificationReport report;
  /// n x (n - d) orthonormal basis U of the complement range(I - P).
  Matrix orthonormal_complement;
  /// omega written in the orthonormal basis {(e_j, 0)} u {(0, u_i)} of X1.
  HilbertFrame omega;
  FrameBounds base_bounds;
  FrameBounds omega_bounds;
  /// Eigenvalues of S_omega, nondecreasing.
  std::vector<double> omega_spectrum;
};

/// Dilates a Hilbert frame to a Riesz basis of X1 = H (+) (I - P)(R^n) and
/// checks the Hilbert-specific identities on top of verify_dilation:
/// compress is an orthogonal projection, eig(S_omega) = eig(S) u {1,...,1},
/// g_k(xi) = <xi, omega_k> on X1, and theta_omega S_omega^{-1} theta_omega^* = I.
NaimarkDilation naimark_dilate(const HilbertFrame& frame, double tolerance = kDefaultTolerance,
                               double cond_limit = kDefaultCondLimit);

}  // namespace framekit
