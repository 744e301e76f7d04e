#include "framekit/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "framekit/error.hpp"
#include "framekit/random.hpp"
#include "framekit/riesz.hpp"

namespace framekit {

namespace {

void require_frame(const HilbertFrame& frame) {
  if (frame.space_dim() == 0 || frame.seq_dim() == 0) throw NotAFrame("empty frame");
  const std::size_t rank = numerical_rank(frame.vectors);
  if (rank < frame.space_dim()) {
    throw NotAFrame("vectors span a subspace of dimension " + std::to_string(rank) + " < " +
                    std::to_string(frame.space_dim()));
  }
}

// Inner product of X (+) R^n: <x1, x2> + <y1, y2>.
double sum_inner(const SumElement& a, const SumElement& b) { return dot(a.x, b.x) + dot(a.y, b.y); }

}  // namespace

ClassifiedFrame frame_from_vectors(const Matrix& vectors, double cond_limit, double tolerance) {
  HilbertFrame frame{vectors};
  auto cls = classify(frame.pair(), cond_limit, tolerance);
  if (numerical_rank(vectors) < vectors.rows()) cls.kind = PasfKind::NotPasf;
  return {std::move(frame), cls};
}

FrameBounds frame_bounds(const HilbertFrame& frame) {
  require_frame(frame);
  const auto ev = symmetric_eigenvalues(frame.vectors * frame.vectors.transpose());
  return {ev.front(), ev.back()};
}

VerificationReport hilbert_fundamentals(const HilbertFrame& frame, double tolerance,
                                        double cond_limit) {
  require_frame(frame);
  const FramePair pair = frame.pair();
  const std::size_t d = frame.space_dim();
  const Matrix& theta = pair.analysis_matrix();
  const Matrix& synth = pair.synthesis_matrix();
  const Matrix s = frame_operator(pair);
  VerificationReport r;

  r.add("S_symmetric", defect(s, s.transpose()), tolerance);
  const auto ev = symmetric_eigenvalues(s);
  r.add_flag("S_positive_definite", ev.front() > 0.0);

  double fourier_f = 0.0;
  double fourier_v = 0.0;
  Rng rng(0x5eed);
  std::vector<Vector> probes;
  for (std::size_t j = 0; j < d; ++j) probes.push_back(unit_vector(d, j));
  for (int k = 0; k < 4; ++k) probes.push_back(rng.vector(d));
  for (const auto& x : probes) {
    fourier_f = std::max(fourier_f, defect(reconstruct(pair, x, ExpansionMode::DualFunctionals, cond_limit), x));
    fourier_v = std::max(fourier_v, defect(reconstruct(pair, x, ExpansionMode::DualVectors, cond_limit), x));
  }
  r.add("fourier_dual_functionals", fourier_f, tolerance);
  r.add("fourier_dual_vectors", fourier_v, tolerance);

  r.add_flag("analysis_injective", numerical_rank(theta) == d);
  r.add_flag("synthesis_surjective", numerical_rank(synth) == d);
  r.add("adjoint_relation", defect(theta.transpose(), synth), tolerance);
  r.add("S_equals_adjoint_product", defect(s, theta.transpose() * theta), tolerance);

  const Matrix p = theta * (invert(s, cond_limit).inverse * theta.transpose());
  r.add("P_symmetric", defect(p, p.transpose()), tolerance);
  r.add("P_idempotent", defect(p * p, p), tolerance);
  r.add("P_range", defect(p * theta, theta), tolerance);
  r.add("P_trace", std::abs(p.trace() - static_cast<double>(d)), tolerance);
  return r;
}

NaimarkDilation naimark_dilate(const HilbertFrame& frame, double tolerance, double cond_limit) {
  require_frame(frame);
  const FramePair pair = frame.pair();
  const std::size_t d = frame.space_dim();
  const std::size_t n = frame.seq_dim();
  const std::size_t m = n - d;

  DilationBundle bundle = dilate(pair, cond_limit);
  VerificationReport report = verify_dilation(bundle, tolerance, cond_limit);
  const Matrix& q = bundle.complement_projector();

  // P_tau symmetric, so range(I - P) is orthogonal to range(P).
  const Matrix p = Matrix::identity(n) - q;
  report.add("complement_orthogonal", (p.transpose() * q).max_abs(), tolerance);

  // Orthonormal basis of the complement: eigenvectors of I - P at eigenvalue 1.
  Matrix qs = 0.5 * (q + q.transpose());
  const auto eig = symmetric_eigen(qs);
  std::vector<std::size_t> ones;
  for (std::size_t k = 0; k < n; ++k)
    if (eig.values[k] > 0.5) ones.push_back(k);
  if (ones.size() != m) {
    throw MathError("complement has " + std::to_string(ones.size()) +
                    " unit eigenvalues, expected " + std::to_string(m));
  }
  Matrix u = eig.vectors.select_columns(ones);

  // Orthonormal basis of X1 under the 2-sum inner product.
  std::vector<SumElement> basis;
  for (std::size_t j = 0; j < d; ++j) basis.push_back({unit_vector(d, j), Vector(n, 0.0)});
  for (std::size_t i = 0; i < m; ++i) basis.push_back({Vector(d, 0.0), u.col(i)});

  // (1) compress is an orthogonal projection: C_ij = <b_i, P b_j>.
  Matrix c(n, n);
  bool in_complement = true;
  for (std::size_t j = 0; j < n; ++j) {
    Vector x;
    try {
      x = compress(bundle, basis[j], tolerance);
    } catch (const NotInComplement&) {
      in_complement = false;
      x = basis[j].x;
    }
    const SumElement embedded{x, Vector(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) c(i, j) = sum_inner(basis[i], embedded);
  }
  report.add_flag("orthonormal_basis_in_complement", in_complement);
  report.add("compress_idempotent", defect(c * c, c), tolerance);
  report.add("compress_symmetric", defect(c, c.transpose()), tolerance);

  // omega in orthonormal coordinates: column k = (tau_k, U^T (I - P) e_k).
  Matrix omega(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const SumElement wk = bundle.omega(k);
    for (std::size_t i = 0; i < n; ++i) omega(i, k) = sum_inner(basis[i], wk);
  }
  HilbertFrame omega_frame{omega};

  // (2) S_omega = S (+) I, so its spectrum is eig(S) u {1 x (n - d)}.
  const Matrix s = frame_operator(pair);
  const Matrix s_omega = omega * omega.transpose();
  report.add("omega_frame_operator_block", defect(s_omega, block_diag(s, Matrix::identity(m))),
             tolerance);
  const auto base_spec = symmetric_eigenvalues(s);
  const auto omega_spec = symmetric_eigenvalues(s_omega);
  std::vector<double> expected = base_spec;
  expected.insert(expected.end(), m, 1.0);
  std::sort(expected.begin(), expected.end());
  report.add("omega_spectrum", defect(omega_spec, expected), tolerance);

  const FrameBounds base_bounds{base_spec.front(), base_spec.back()};
  const FrameBounds omega_bounds{omega_spec.front(), omega_spec.back()};
  const double sharp_a = m > 0 ? std::min(base_bounds.a, 1.0) : base_bounds.a;
  const double sharp_b = m > 0 ? std::max(base_bounds.b, 1.0) : base_bounds.b;
  report.add("omega_bounds",
             std::max(std::abs(omega_bounds.a - sharp_a), std::abs(omega_bounds.b - sharp_b)),
             tolerance);

  // Spot-check a ||h||^2 <= sum_k <h, omega_k>^2 <= b ||h||^2 on random h in X1.
  Rng rng(0xb0b);
  double bessel = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Vector coords = rng.vector(n);
    SumElement h{Vector(d, 0.0), Vector(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
      h.x = axpy(coords[i], basis[i].x, h.x);
      h.y = axpy(coords[i], basis[i].y, h.y);
    }
    const double hh = sum_inner(h, h);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double c_k = sum_inner(h, bundle.omega(k));
      sum += c_k * c_k;
    }
    bessel = std::max({bessel, (sum - omega_bounds.b * hh) / hh, (omega_bounds.a * hh - sum) / hh});
  }
  report.add("bessel_bounds", bessel, tolerance);

  // (3) g_k(xi) = <xi, omega_k> for xi in X1.
  double claim = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      claim = std::max(claim, std::abs(bundle.apply_g(k, basis[j]) - sum_inner(basis[j], bundle.omega(k))));
    }
  }
  report.add("claim_g_is_inner_product", claim, tolerance);

  // (4) theta_omega S_omega^{-1} theta_omega^* = I: omega is a Riesz basis.
  const RieszVerdict verdict = is_riesz_basis_hilbert(omega_frame.pair(), cond_limit, tolerance);
  report.add("omega_riesz_identity", verdict.identity_defect, tolerance);
  report.add_flag("omega_riesz_routes_agree",
                  verdict.route_definitional == verdict.route_characterization);

  return {std::move(bundle), std::move(report), std::move(u), std::move(omega_frame),
          base_bounds,       omega_bounds,      omega_spec};
}

}  // namespace framekit
