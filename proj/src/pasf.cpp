#include "framekit/pasf.hpp"

#include <string>

#include "framekit/error.hpp"

namespace framekit {

FramePair::FramePair(Matrix functionals, Matrix vectors, double p, double q)
    : functionals_(std::move(functionals)), vectors_(std::move(vectors)), p_(p), q_(q) {
  require_exponent(p_);
  require_exponent(q_);
  const std::size_t d = vectors_.rows();
  const std::size_t n = vectors_.cols();
  if (d == 0 || n == 0) throw DimensionMismatch("frame pair needs d >= 1 and n >= 1");
  if (functionals_.rows() != n || functionals_.cols() != d) {
    throw DimensionMismatch("functionals must be " + std::to_string(n) + "x" + std::to_string(d) +
                            ", got " + std::to_string(functionals_.rows()) + "x" +
                            std::to_string(functionals_.cols()));
  }
}

FramePair::FramePair(Matrix functionals, Matrix vectors, double p)
    : FramePair(std::move(functionals), std::move(vectors), p, p) {}

FramePair FramePair::hilbert(Matrix vectors) {
  Matrix f = vectors.transpose();
  return FramePair(std::move(f), std::move(vectors), 2.0, 2.0);
}

bool FramePair::is_hilbert_style(double tolerance) const {
  return p_ == 2.0 && defect(functionals_, vectors_.transpose()) <= tolerance;
}

std::string_view to_string(PasfKind kind) {
  switch (kind) {
    case PasfKind::SchauderFrame: return "SCHAUDER_FRAME";
    case PasfKind::Pasf: return "PASF";
    case PasfKind::NotPasf: return "NOT_PASF";
  }
  return "UNKNOWN";
}

Vector analysis(const FramePair& pair, std::span<const double> x) {
  if (x.size() != pair.space_dim()) throw DimensionMismatch("analysis: x must have dimension d");
  return pair.functionals() * x;
}

Vector synthesis(const FramePair& pair, std::span<const double> a) {
  if (a.size() != pair.seq_dim()) throw DimensionMismatch("synthesis: a must have dimension n");
  return pair.vectors() * a;
}

Matrix frame_operator(const FramePair& pair) { return pair.vectors() * pair.functionals(); }

PasfClassification classify(const FramePair& pair, double cond_limit, double tolerance) {
  const Matrix s = frame_operator(pair);
  const double id_defect = defect(s, Matrix::identity(pair.space_dim()));
  try {
    const auto inv = invert(s, cond_limit);
    const auto kind = id_defect <= tolerance ? PasfKind::SchauderFrame : PasfKind::Pasf;
    return {kind, inv.condition_estimate, id_defect};
  } catch (const NotInvertible& e) {
    return {PasfKind::NotPasf, e.condition_estimate(), id_defect};
  }
}

FramePair canonical_dual(const FramePair& pair, double cond_limit) {
  const Matrix s_inv = invert(frame_operator(pair), cond_limit).inverse;
  return FramePair(pair.functionals() * s_inv, s_inv * pair.vectors(), pair.p(), pair.q());
}

Vector reconstruct(const FramePair& pair, std::span<const double> x, ExpansionMode mode,
                   double cond_limit) {
  if (x.size() != pair.space_dim()) throw DimensionMismatch("reconstruct: x must have dimension d");
  const Matrix s_inv = invert(frame_operator(pair), cond_limit).inverse;
  switch (mode) {
    case ExpansionMode::DualFunctionals: {
      const Matrix dual_f = pair.functionals() * s_inv;
      return pair.vectors() * (dual_f * x);
    }
    case ExpansionMode::DualVectors: {
      const Matrix dual_t = s_inv * pair.vectors();
      return dual_t * (pair.functionals() * x);
    }
  }
  throw InvalidArgument("reconstruct: unknown expansion mode");
}

Matrix pasf_projection(const FramePair& pair, double cond_limit) {
  const Matrix s_inv = invert(frame_operator(pair), cond_limit).inverse;
  return pair.functionals() * (s_inv * pair.vectors());
}

}  // namespace framekit
