#include <gtest/gtest.h>

#include <cmath>

#include "framekit/dilation.hpp"
#include "framekit/error.hpp"
#include "framekit/generate.hpp"
#include "framekit/random.hpp"
#include "framekit/riesz.hpp"

using namespace framekit;

namespace {

FramePair line_pair(double p = 1.0) {
  return {Matrix::from_rows({{1}, {1}}), Matrix::from_rows({{0.5, 0.5}}), p};
}

// S_{g,omega} in X1 coordinates from the raw definitions: column j is the
// coordinate vector of sum_k g_k(b_j) omega_k.
Matrix raw_s_g_omega(const DilationBundle& b) {
  const std::size_t d = b.space_dim(), n = b.seq_dim(), m = b.complement_dim();
  const Matrix& w = b.complement_basis;
  const Matrix coords = left_inverse(w);
  Matrix s(d + m, d + m);
  for (std::size_t j = 0; j < d + m; ++j) {
    const SumElement basis = j < d ? SumElement{unit_vector(d, j), Vector(n, 0.0)}
                                   : SumElement{Vector(d, 0.0), w.col(j - d)};
    Vector x(d, 0.0), y(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double c = b.apply_g(k, basis);
      const SumElement wk = b.omega(k);
      x = axpy(c, wk.x, x);
      y = axpy(c, wk.y, y);
    }
    for (std::size_t i = 0; i < d; ++i) s(i, j) = x[i];
    const Vector yc = coords * y;
    for (std::size_t i = 0; i < m; ++i) s(d + i, j) = yc[i];
  }
  return s;
}

}  // namespace

TEST(Dilate, IdentityPairIsTrivial) {
  const DilationBundle b = dilate(FramePair(Matrix::identity(2), Matrix::identity(2), 2.0));
  EXPECT_TRUE(b.degenerate());
  EXPECT_EQ(b.complement_basis.cols(), 0u);
  EXPECT_EQ(b.s_g_omega, Matrix::identity(2));
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(b.omega(k).x, unit_vector(2, k));
    EXPECT_EQ(b.omega(k).y, (Vector{0, 0}));
  }
  const auto r = verify_dilation(b);
  EXPECT_TRUE(r.overall());
  EXPECT_EQ(r.max_defect(), 0.0);
}

TEST(Dilate, LinePair) {
  const DilationBundle b = dilate(line_pair());
  const Matrix q = Matrix::from_rows({{0.5, -0.5}, {-0.5, 0.5}});
  EXPECT_EQ(b.complement_projector(), q);
  EXPECT_EQ(b.omega(0).x, (Vector{0.5}));
  EXPECT_EQ(b.omega(0).y, (Vector{0.5, -0.5}));
  EXPECT_EQ(b.omega(1).x, (Vector{0.5}));
  EXPECT_EQ(b.omega(1).y, (Vector{-0.5, 0.5}));
  EXPECT_EQ(b.complement_dim(), 1u);
  // T (I - P) = [1/2, 1/2] [[1/2, -1/2], [-1/2, 1/2]] = 0
  EXPECT_EQ(b.base.vectors() * q, Matrix(1, 2));
  const auto r = verify_dilation(b);
  EXPECT_TRUE(r.overall());
  EXPECT_LE(r.max_defect(), 1e-15);
  EXPECT_EQ(r.defect("zero_sum_1"), 0.0);
}

TEST(Dilate, MercedesComplement) {
  const DilationBundle b = dilate(mercedes_pair());
  const Matrix& q = b.complement_projector();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(q(i, j), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(b.complement_dim(), 1u);
  EXPECT_LE(verify_dilation(b).max_defect(), 1e-9);
}

TEST(Dilate, SingularThrows) {
  EXPECT_THROW(dilate(FramePair(Matrix(3, 2), Matrix(2, 3), 2.0)), NotInvertible);
}

TEST(Compress, Examples) {
  const DilationBundle mb = dilate(mercedes_pair());
  EXPECT_EQ(compress(mb, {Vector{1, 2}, Vector(3, 0.0)}), (Vector{1, 2}));
  const Vector w = mb.complement_basis.col(0);
  EXPECT_EQ(compress(mb, {Vector{0, 0}, w}), (Vector{0, 0}));

  const DilationBundle lb = dilate(line_pair());
  EXPECT_EQ(compress(lb, lb.omega(0)), (Vector{0.5}));
  EXPECT_THROW(compress(lb, {Vector{0}, Vector{1, 0}}), NotInComplement);
  EXPECT_THROW(compress(lb, {Vector{0, 0}, Vector{0, 0}}), DimensionMismatch);
}

TEST(DirectSumNorm, Examples) {
  const FramePair two(Matrix::identity(2), Matrix::identity(2), 2.0);
  EXPECT_DOUBLE_EQ(direct_sum_norm(dilate(two), {Vector{3, 4}, Vector{0, 0}}), 5.0);
  const DilationBundle lb = dilate(line_pair(1.0));
  EXPECT_DOUBLE_EQ(direct_sum_norm(lb, {Vector{0}, Vector{0.5, -0.5}}), 1.0);
  EXPECT_DOUBLE_EQ(direct_sum_norm(lb, {Vector{1}, Vector{0.5, -0.5}}), 2.0);
  EXPECT_THROW(direct_sum_norm(lb, {Vector{1}, Vector{1, 1}}), NotInComplement);
}

TEST(DirectSumNorm, IsometricEmbedding) {
  Rng rng(8);
  for (double p : {1.0, 1.5, 2.0, 3.0, kInfinity}) {
    GenSpec spec;
    spec.d = 3;
    spec.n = 5;
    spec.p = p == kInfinity ? 2.0 : p;
    spec.seed = 4;
    const FramePair base = generate(spec);
    const FramePair pair(base.functionals(), base.vectors(), p, 1.5);
    const DilationBundle b = dilate(pair);
    for (int i = 0; i < 50; ++i) {
      const Vector x = rng.vector(3, -100, 100);
      EXPECT_EQ(direct_sum_norm(b, {x, Vector(5, 0.0)}), vector_p_norm(x, 1.5));
    }
  }
}

TEST(VerifyDilation, RandomSuiteWithRawAssembly) {
  const double ps[] = {1.0, 1.5, 2.0, 3.0};
  Rng rng(404);
  for (int i = 0; i < 100; ++i) {
    GenSpec spec;
    spec.d = 1 + rng.index(6);
    spec.n = spec.d + rng.index(15 - spec.d);
    spec.p = ps[i % 4];
    spec.seed = 7000 + static_cast<std::uint64_t>(i);
    const FramePair pair = generate(spec);
    const DilationBundle b = dilate(pair);
    const auto r = verify_dilation(b);
    EXPECT_TRUE(r.overall()) << i;
    for (const char* name : {"restriction_f", "restriction_tau", "zero_sum_1", "zero_sum_2",
                             "block_S", "riesz_identity"}) {
      EXPECT_LE(r.defect(name), 1e-8) << name << " case " << i;
    }
    EXPECT_EQ(r.defect("isometry"), 0.0);

    // independent oracle: S_{g,omega} from sum_k g_k(.) omega_k
    const Matrix raw = raw_s_g_omega(b);
    EXPECT_LE(defect(raw, block_diag(frame_operator(pair), Matrix::identity(b.complement_dim()))),
              1e-8);
    EXPECT_LE(defect(b.complement_projector() * b.complement_basis, b.complement_basis), 1e-9);
    EXPECT_EQ(numerical_rank(b.complement_basis), pair.seq_dim() - pair.space_dim());

    const FramePair dp = dilated_pair(b);
    EXPECT_NE(classify(dp).kind, PasfKind::NotPasf);
    EXPECT_TRUE(is_p_approximate_riesz(dp).is_riesz) << i;

    // compress is idempotent onto X
    const SumElement xi{rng.vector(spec.d), b.complement_projector() * rng.vector(spec.n)};
    const Vector once = compress(b, xi);
    EXPECT_EQ(compress(b, {once, Vector(spec.n, 0.0)}), once);
  }
}

TEST(VerifyDilation, RieszInputGivesTrivialBundle) {
  GenSpec spec;
  spec.d = 4;
  spec.n = 4;
  spec.kind = GenKind::Riesz;
  spec.p = 3;
  spec.seed = 9;
  const FramePair pair = generate(spec);
  const DilationBundle b = dilate(pair);
  EXPECT_TRUE(b.degenerate());
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(b.omega(k).x, pair.vectors().col(k));
    EXPECT_EQ(b.omega(k).y, Vector(4, 0.0));
  }
  EXPECT_EQ(b.g, hstack(pair.functionals(), Matrix(4, 4)));
  EXPECT_LE(verify_dilation(b).max_defect(), 1e-12);
}

TEST(VerifyDilation, DetectsCorruptedBundle) {
  DilationBundle b = dilate(mercedes_pair());
  b.s_g_omega(0, 0) += 1e-3;
  const auto r = verify_dilation(b);
  EXPECT_FALSE(r.overall());
  EXPECT_GE(r.defect("block_S"), 1e-3 * 0.999);
}
