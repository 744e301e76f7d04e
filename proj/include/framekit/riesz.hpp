#pragma once

#include "framekit/linalg.hpp"
#include "framekit/pasf.hpp"

namespace framekit {

struct RieszVerdict {
  bool is_riesz;
  /// n == d and the basis-defining operator is invertible.
  bool route_definitional;
  /// Frame (rank d) and theta S^{-1} theta* == I_n.
  bool route_characterization;
  /// defect(F S^{-1} T, I_n); infinity when S could not be inverted.
  double identity_defect;
};

/// The Riesz basis {T e_k}: vectors are the columns of T, functionals the
/// rows of T^T, p = q = 2. Throws NotInvertible if T is singular.
FramePair riesz_from_invertible(const Matrix& t, double cond_limit = kDefaultCondLimit);

/// The frame {T e_k} of a surjective T : R^n -> R^d. Throws NotSurjective
/// when rank(T) < d.
FramePair holub_frame_from_operator(const Matrix& t);

/// Decides the Riesz basis property of a Hilbert-style pair (F = T^T, p = 2)
/// by both the definition and the operator characterization. Throws
/// NotHilbertStyle otherwise.
RieszVerdict is_riesz_basis_hilbert(const FramePair& pair, double cond_limit = kDefaultCondLimit,
                                    double tolerance = kDefaultTolerance);

/// p-approximate Riesz basis test: P_{f,tau} == I_n. Throws NotInvertible
/// when the pair is not a p-ASF.
RieszVerdict is_p_approximate_riesz(const FramePair& pair, double cond_limit = kDefaultCondLimit,
                                    double tolerance = kDefaultTolerance);

}  // namespace framekit
