#include "framekit/riesz.hpp"

#include <string>

#include "framekit/error.hpp"

namespace framekit {

namespace {

bool invertible(const Matrix& m, double cond_limit) {
  if (!m.is_square()) return false;
  try {
    invert(m, cond_limit);
    return true;
  } catch (const NotInvertible&) {
    return false;
  }
}

}  // namespace

FramePair riesz_from_invertible(const Matrix& t, double cond_limit) {
  if (!t.is_square()) throw DimensionMismatch("riesz_from_invertible: T must be square");
  invert(t, cond_limit);
  return FramePair::hilbert(t);
}

FramePair holub_frame_from_operator(const Matrix& t) {
  const std::size_t rank = numerical_rank(t);
  if (rank < t.rows()) {
    throw NotSurjective("operator has rank " + std::to_string(rank) + " < " +
                        std::to_string(t.rows()));
  }
  return FramePair::hilbert(t);
}

RieszVerdict is_riesz_basis_hilbert(const FramePair& pair, double cond_limit, double tolerance) {
  if (!pair.is_hilbert_style()) {
    throw NotHilbertStyle("pair is not Hilbert style (need p = 2 and F = T^T)");
  }
  const std::size_t d = pair.space_dim();
  const std::size_t n = pair.seq_dim();
  const Matrix& t = pair.vectors();
  const bool frame = numerical_rank(t) == d;

  // Definition: the standard basis of R^n is mapped onto the vectors by an
  // invertible operator, which forces n = d.
  const bool definitional = n == d && frame && invertible(t, cond_limit);

  bool characterization = false;
  double id_defect = kInfinity;
  if (frame) {
    try {
      const Matrix s_inv = invert(frame_operator(pair), cond_limit).inverse;
      // theta_tau = T^T, theta_tau^* = T.
      const Matrix p = t.transpose() * (s_inv * t);
      id_defect = defect(p, Matrix::identity(n));
      characterization = id_defect <= tolerance;
    } catch (const NotInvertible&) {
      characterization = false;
    }
  }
  return {characterization, definitional, characterization, id_defect};
}

RieszVerdict is_p_approximate_riesz(const FramePair& pair, double cond_limit, double tolerance) {
  const std::size_t n = pair.seq_dim();
  const Matrix p = pasf_projection(pair, cond_limit);
  const double id_defect = defect(p, Matrix::identity(n));
  const bool riesz = id_defect <= tolerance;
  const bool definitional = n == pair.space_dim() && invertible(pair.functionals(), cond_limit) &&
                            invertible(pair.vectors(), cond_limit);
  return {riesz, definitional, riesz, id_defect};
}

}  // namespace framekit
