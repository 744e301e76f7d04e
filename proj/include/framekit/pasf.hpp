#pragma once

#include <cstddef>
#include <string_view>

#include "framekit/linalg.hpp"
#include "framekit/matrix.hpp"

namespace framekit {

/// A pair ({f_k}, {tau_k}) on X = R^d with coefficients in R^n.
///
/// Row k of the functional matrix F (n x d) is f_k, so the analysis map is
/// x -> F x. Column k of the vector matrix T (d x n) is tau_k, so the
/// synthesis map is a -> T a. `p` is the sequence-space exponent and `q` the
/// norm exponent on X; q only affects norms, never the algebra.
class FramePair {
 public:
  /// Throws DimensionMismatch unless F is n x d and T is d x n with d, n >= 1,
  /// and InvalidExponent for exponents outside [1, inf].
  FramePair(Matrix functionals, Matrix vectors, double p, double q);
  /// q defaults to p.
  FramePair(Matrix functionals, Matrix vectors, double p);

  /// The Hilbert-style pair f_k = <., tau_k>, i.e. F = T^T, p = q = 2.
  static FramePair hilbert(Matrix vectors);

  std::size_t space_dim() const noexcept { return vectors_.rows(); }
  std::size_t seq_dim() const noexcept { return vectors_.cols(); }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  const Matrix& functionals() const noexcept { return functionals_; }
  const Matrix& vectors() const noexcept { return vectors_; }
  const Matrix& analysis_matrix() const noexcept { return functionals_; }
  const Matrix& synthesis_matrix() const noexcept { return vectors_; }

  /// F == T^T exactly and p == 2.
  bool is_hilbert_style(double tolerance = 0.0) const;

  friend bool operator==(const FramePair&, const FramePair&) = default;

 private:
  Matrix functionals_;
  Matrix vectors_;
  double p_;
  double q_;
};

enum class PasfKind { SchauderFrame, Pasf, NotPasf };

std::string_view to_string(PasfKind kind);

struct PasfClassification {
  PasfKind kind;
  double condition_of_S;
  double identity_defect_of_S;
};

/// theta_f x = (f_1(x), ..., f_n(x)).
Vector analysis(const FramePair& pair, std::span<const double> x);
/// theta_tau a = sum_k a_k tau_k.
Vector synthesis(const FramePair& pair, std::span<const double> a);
/// S = theta_tau theta_f = T F, the map x -> sum_k f_k(x) tau_k.
Matrix frame_operator(const FramePair& pair);

PasfClassification classify(const FramePair& pair, double cond_limit = kDefaultCondLimit,
                            double tolerance = kDefaultTolerance);

/// (f_k S^{-1}, S^{-1} tau_k) with the same exponents.
FramePair canonical_dual(const FramePair& pair, double cond_limit = kDefaultCondLimit);

enum class ExpansionMode {
  DualFunctionals,  // x = sum_k (f_k S^{-1})(x) tau_k
  DualVectors,      // x = sum_k f_k(x) S^{-1} tau_k
};

Vector reconstruct(const FramePair& pair, std::span<const double> x, ExpansionMode mode,
                   double cond_limit = kDefaultCondLimit);

/// P = F S^{-1} T, an (oblique) projection of R^n onto range(F).
Matrix pasf_projection(const FramePair& pair, double cond_limit = kDefaultCondLimit);

}  // namespace framekit
