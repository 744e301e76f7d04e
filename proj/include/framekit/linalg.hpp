#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "framekit/matrix.hpp"

namespace framekit {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Identity/equality defects at or below this are treated as exact.
inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr double kDefaultCondLimit = 1e12;
/// Singular values below kRankThreshold * sigma_max do not count toward rank.
inline constexpr double kRankThreshold = 1e-10;

struct InversionResult {
  Matrix inverse;
  /// 2-norm condition number sigma_max / sigma_min, >= 1.
  double condition_estimate;
};

/// Inverse by Gauss-Jordan elimination with partial pivoting.
///
/// The condition estimate comes from singular values computed by one-sided
/// Jacobi. Throws NotInvertible when the estimate exceeds cond_limit or a
/// zero pivot is met, and DimensionMismatch for non-square input.
InversionResult invert(const Matrix& m, double cond_limit = kDefaultCondLimit);

/// max_ij |M_ij - N_ij|.
double defect(const Matrix& m, const Matrix& n);
double defect(std::span<const double> x, std::span<const double> y);

/// (sum |v_i|^p)^(1/p), or max |v_i| for p = infinity.
double vector_p_norm(std::span<const double> v, double p);

/// Throws InvalidExponent unless p is in [1, inf].
void require_exponent(double p);

/// Lower bound on the l^p -> l^p operator norm of M.
///
/// Exact for p = 1 (max column sum), p = inf (max row sum) and p = 2 (largest
/// singular value). Otherwise the best ratio ||Mv||_p / ||v||_p seen over the
/// coordinate vectors and `samples` seeded random starts, each refined by the
/// nonlinear power iteration v <- dual_{p'}(M^T dual_p(M v)).
double estimate_operator_p_norm(const Matrix& m, double p, int samples, std::uint64_t seed);

struct SymmetricEigen {
  std::vector<double> values;  // nondecreasing
  Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic Jacobi rotations on a symmetric matrix. Throws NotSymmetric if the
/// input is not symmetric within 1e-12 (relative to max(1, max|M_ij|)).
SymmetricEigen symmetric_eigen(const Matrix& m);
std::vector<double> symmetric_eigenvalues(const Matrix& m);

/// Singular values in nonincreasing order (one-sided Jacobi).
std::vector<double> singular_values(const Matrix& m);

std::size_t numerical_rank(const Matrix& m, double rel_threshold = kRankThreshold);

/// sigma_max / sigma_min of a square matrix; infinity when singular.
double condition_number(const Matrix& m);

/// Indices of `count` columns picked by Gaussian elimination with complete
/// pivoting; the first `rank` of them span the column space. Returns the
/// numerical rank (pivots above rel_threshold * max|M_ij|) in `rank`.
std::vector<std::size_t> pivot_columns(const Matrix& m, double rel_threshold, std::size_t& rank);

/// Least-squares left inverse (W^T W)^{-1} W^T of a full-column-rank W.
Matrix left_inverse(const Matrix& w, double cond_limit = kDefaultCondLimit);

}  // namespace framekit
