#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "framekit/error.hpp"
#include "framekit/generate.hpp"
#include "framekit/pasf.hpp"
#include "framekit/random.hpp"

using namespace framekit;
using Rational = boost::multiprecision::cpp_rational;

namespace {

const double kS3 = std::sqrt(3.0) / 2.0;

FramePair identity_pair() { return {Matrix::identity(2), Matrix::identity(2), 2.0}; }
FramePair line_pair() { return {Matrix::from_rows({{1}, {1}}), Matrix::from_rows({{0.5, 0.5}}), 1.0}; }

void expect_near(std::span<const double> a, std::span<const double> b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << i;
}

}  // namespace

TEST(Analysis, Examples) {
  expect_near(analysis(identity_pair(), Vector{3, 7}), Vector{3, 7}, 0);
  expect_near(analysis(mercedes_pair(), Vector{1, 0}), Vector{0, -kS3, kS3}, 1e-15);
  expect_near(analysis(line_pair(), Vector{4}), Vector{4, 4}, 0);
  EXPECT_THROW(analysis(line_pair(), Vector{1, 2}), DimensionMismatch);
}

TEST(Synthesis, Examples) {
  expect_near(synthesis(identity_pair(), Vector{3, 7}), Vector{3, 7}, 0);
  expect_near(synthesis(line_pair(), Vector{1, 1}), Vector{1}, 0);
  expect_near(synthesis(mercedes_pair(), Vector{1, 0, 0}), Vector{0, 1}, 0);
}

TEST(FrameOperator, Examples) {
  EXPECT_EQ(frame_operator(identity_pair()), Matrix::identity(2));
  EXPECT_EQ(frame_operator(line_pair()), Matrix::from_rows({{1}}));
  // sum_k tau_k tau_k^T by direct summation
  const FramePair m = mercedes_pair();
  Matrix oracle(2, 2);
  for (std::size_t k = 0; k < 3; ++k) {
    const Vector t = m.vectors().col(k);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) oracle(i, j) += t[i] * t[j];
  }
  EXPECT_LE(defect(frame_operator(m), oracle), 1e-15);
  EXPECT_LE(defect(frame_operator(m), 1.5 * Matrix::identity(2)), 1e-15);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(identity_pair()).kind, PasfKind::SchauderFrame);
  const auto c = classify(mercedes_pair());
  EXPECT_EQ(c.kind, PasfKind::Pasf);
  EXPECT_NEAR(c.condition_of_S, 1.0, 1e-12);
  EXPECT_NEAR(c.identity_defect_of_S, 0.5, 1e-15);
  const FramePair zero(Matrix(3, 2), Matrix(2, 3), 2.0);
  EXPECT_EQ(classify(zero).kind, PasfKind::NotPasf);
  EXPECT_EQ(to_string(PasfKind::NotPasf), "NOT_PASF");
}

TEST(FramePair, Validation) {
  EXPECT_THROW(FramePair(Matrix(3, 2), Matrix(3, 2), 2.0), DimensionMismatch);
  EXPECT_THROW(FramePair(Matrix(0, 0), Matrix(0, 0), 2.0), DimensionMismatch);
  EXPECT_THROW(FramePair(Matrix(3, 2), Matrix(2, 3), 0.5), InvalidExponent);
  EXPECT_THROW(FramePair(Matrix(3, 2), Matrix(2, 3), 2.0, std::nan("")), InvalidExponent);
  EXPECT_TRUE(mercedes_pair().is_hilbert_style());
  EXPECT_FALSE(line_pair().is_hilbert_style());
}

TEST(CanonicalDual, Examples) {
  EXPECT_EQ(canonical_dual(identity_pair()), identity_pair());
  const FramePair m = mercedes_pair();
  const FramePair dual = canonical_dual(m);
  EXPECT_LE(defect(dual.vectors(), (2.0 / 3.0) * m.vectors()), 1e-15);
  EXPECT_LE(defect(dual.functionals(), (2.0 / 3.0) * m.functionals()), 1e-15);
  EXPECT_EQ(canonical_dual(line_pair()), line_pair());
}

TEST(Reconstruct, Examples) {
  for (auto mode : {ExpansionMode::DualFunctionals, ExpansionMode::DualVectors}) {
    expect_near(reconstruct(identity_pair(), Vector{1, 2}, mode), Vector{1, 2}, 0);
    expect_near(reconstruct(mercedes_pair(), Vector{0.6, -0.8}, mode), Vector{0.6, -0.8}, 1e-12);
    expect_near(reconstruct(line_pair(), Vector{5}, mode), Vector{5}, 0);
  }
}

TEST(Projection, Examples) {
  EXPECT_EQ(pasf_projection(identity_pair()), Matrix::identity(2));
  EXPECT_EQ(pasf_projection(line_pair()), Matrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
  const Matrix p = pasf_projection(mercedes_pair());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(p(i, j), i == j ? 2.0 / 3.0 : -1.0 / 3.0, 1e-15);
  EXPECT_THROW(pasf_projection(FramePair(Matrix(3, 2), Matrix(2, 3), 2.0)), NotInvertible);
}

TEST(PasfProperties, RandomSuite) {
  const double ps[] = {1.0, 1.5, 2.0, 3.0};
  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    GenSpec spec;
    spec.d = 1 + rng.index(6);
    spec.n = spec.d + rng.index(15 - spec.d);
    spec.p = ps[i % 4];
    spec.seed = 1000 + static_cast<std::uint64_t>(i);
    const FramePair pair = generate(spec);
    const std::size_t d = pair.space_dim();

    EXPECT_EQ(frame_operator(pair), pair.synthesis_matrix() * pair.analysis_matrix());
    EXPECT_EQ(numerical_rank(pair.analysis_matrix()), d);
    EXPECT_EQ(numerical_rank(pair.synthesis_matrix()), d);

    for (int probe = 0; probe < 10; ++probe) {
      const Vector x = rng.vector(d, -3, 3);
      const double scale = std::max(1.0, vector_p_norm(x, pair.q()));
      for (auto mode : {ExpansionMode::DualFunctionals, ExpansionMode::DualVectors}) {
        const Vector diff = axpy(-1.0, x, reconstruct(pair, x, mode));
        EXPECT_LE(vector_p_norm(diff, pair.q()), 1e-9 * scale);
      }
    }
    const Matrix p = pasf_projection(pair);
    EXPECT_LE(defect(p * p, p), 1e-9);
    EXPECT_EQ(numerical_rank(p), d);
    EXPECT_LE(defect(p * pair.functionals(), pair.functionals()), 1e-9);
  }
}

// Exact arithmetic over Q for d in {1, 2}, n <= 3.
namespace {

using RMat = std::vector<std::vector<Rational>>;

RMat rmul(const RMat& a, const RMat& b) {
  RMat c(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RMat rinv(const RMat& s) {
  if (s.size() == 1) return {{Rational(1) / s[0][0]}};
  const Rational det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
  return {{s[1][1] / det, -s[0][1] / det}, {-s[1][0] / det, s[0][0] / det}};
}

Rational rdet(const RMat& s) { return s.size() == 1 ? s[0][0] : s[0][0] * s[1][1] - s[0][1] * s[1][0]; }

Matrix to_double(const RMat& m) {
  Matrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = static_cast<double>(m[i][j]);
  return out;
}

void expect_exact(const Matrix& got, const RMat& want, double tol) {
  const Matrix w = to_double(want);
  ASSERT_EQ(got.rows(), w.rows());
  ASSERT_EQ(got.cols(), w.cols());
  EXPECT_LE(defect(got, w), tol * std::max(1.0, w.max_abs()));
}

}  // namespace

TEST(PasfProperties, ExactFractionOracle) {
  Rng rng(2718);
  int checked = 0;
  for (int trial = 0; checked < 300 && trial < 5000; ++trial) {
    const std::size_t d = 1 + rng.index(2);
    const std::size_t n = d + rng.index(4 - d);
    auto draw = [&] {
      const auto num = static_cast<long>(rng.index(9)) - 4;
      const auto den = static_cast<long>(rng.index(4)) + 1;
      return Rational(num, den);
    };
    RMat f(n, std::vector<Rational>(d)), t(d, std::vector<Rational>(n));
    for (auto& row : f)
      for (auto& v : row) v = draw();
    for (auto& row : t)
      for (auto& v : row) v = draw();
    const RMat s = rmul(t, f);
    if (rdet(s) == 0) continue;
    // keep cond(S) modest so 1e-12 relative agreement is meaningful
    const FramePair pair(to_double(f), to_double(t), 2.0);
    const auto cls = classify(pair);
    if (cls.condition_of_S > 1e3) continue;
    ++checked;

    const RMat s_inv = rinv(s);
    expect_exact(frame_operator(pair), s, 1e-15);
    expect_exact(pasf_projection(pair), rmul(f, rmul(s_inv, t)), 1e-12);
    const FramePair dual = canonical_dual(pair);
    expect_exact(dual.functionals(), rmul(f, s_inv), 1e-12);
    expect_exact(dual.vectors(), rmul(s_inv, t), 1e-12);

    bool identity = true;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) identity = identity && s[i][j] == Rational(i == j ? 1 : 0);
    EXPECT_EQ(cls.kind == PasfKind::SchauderFrame, identity);
    EXPECT_NE(cls.kind, PasfKind::NotPasf);

    RMat x(d, std::vector<Rational>(1));
    for (auto& row : x) row[0] = draw();
    const Matrix xd = to_double(x);
    // S^{-1} T F x and T F S^{-1} x both equal x exactly
    const RMat via_vectors = rmul(s_inv, rmul(t, rmul(f, x)));
    const RMat via_functionals = rmul(t, rmul(rmul(f, s_inv), x));
    EXPECT_TRUE(via_vectors == x && via_functionals == x);
    expect_exact(Matrix(d, 1, reconstruct(pair, xd.col(0), ExpansionMode::DualVectors)), via_vectors, 1e-12);
    expect_exact(Matrix(d, 1, reconstruct(pair, xd.col(0), ExpansionMode::DualFunctionals)), via_functionals,
                 1e-12);
  }
  EXPECT_EQ(checked, 300);
}
