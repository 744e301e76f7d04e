#include "framekit/generate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "framekit/error.hpp"
#include "framekit/linalg.hpp"
#include "framekit/random.hpp"

namespace framekit {

namespace {

bool well_conditioned(const Matrix& m, double limit) { return condition_number(m) <= limit; }

Matrix random_orthogonal(std::size_t d, Rng& rng) {
  const Matrix a = rng.matrix(d, d);
  return symmetric_eigen(a + a.transpose()).vectors;
}

Matrix harmonic_frame(std::size_t n, double phase) {
  Matrix t(2, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = phase + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    t(0, k) = std::cos(angle);
    t(1, k) = std::sin(angle);
  }
  return t;
}

Matrix tight_vectors(const GenSpec& spec, Rng& rng) {
  const std::size_t d = spec.d;
  const std::size_t n = spec.n;
  if (spec.mercedes) {
    if (d != 2 || n != 3) throw InvalidArgument("the Mercedes preset needs d = 2, n = 3");
    return mercedes_pair().vectors();
  }
  if (n % d == 0) {
    Matrix t(d, 0);
    for (std::size_t b = 0; b < n / d; ++b) t = hstack(t, random_orthogonal(d, rng));
    return t;
  }
  if (d == 2) return harmonic_frame(n, 2.0 * std::numbers::pi * rng.uniform());

  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    const Matrix t0 = rng.matrix(d, n);
    const Matrix s0 = t0 * t0.transpose();
    if (!well_conditioned(s0, spec.condition_target)) continue;
    const auto eig = symmetric_eigen(s0);
    Vector inv_sqrt(d);
    for (std::size_t i = 0; i < d; ++i) inv_sqrt[i] = 1.0 / std::sqrt(eig.values[i]);
    const Matrix s_inv_half = eig.vectors * (Matrix::diagonal(inv_sqrt) * eig.vectors.transpose());
    return std::sqrt(static_cast<double>(n) / static_cast<double>(d)) * (s_inv_half * t0);
  }
  throw GenerationFailed("could not draw a well-conditioned frame for the tight construction");
}

}  // namespace

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::RandomPasf: return "RANDOM_PASF";
    case GenKind::HilbertFrame: return "HILBERT_FRAME";
    case GenKind::Riesz: return "RIESZ";
    case GenKind::Tight: return "TIGHT";
  }
  return "UNKNOWN";
}

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  if (name == "RANDOM_PASF" || name == "random_pasf" || name == "pasf") return GenKind::RandomPasf;
  if (name == "HILBERT_FRAME" || name == "hilbert_frame" || name == "hilbert") return GenKind::HilbertFrame;
  if (name == "RIESZ" || name == "riesz") return GenKind::Riesz;
  if (name == "TIGHT" || name == "tight") return GenKind::Tight;
  return std::nullopt;
}

FramePair mercedes_pair() {
  const double h = std::sqrt(3.0) / 2.0;
  return FramePair::hilbert(Matrix::from_rows({{0.0, -h, h}, {1.0, -0.5, -0.5}}));
}

FramePair generate(const GenSpec& spec) {
  if (spec.d == 0) throw InvalidArgument("d must be >= 1");
  if (spec.n < spec.d) {
    throw InvalidArgument("n = " + std::to_string(spec.n) + " < d = " + std::to_string(spec.d) +
                          ": a frame needs at least d elements");
  }
  if (!(spec.condition_target >= 1.0)) throw InvalidArgument("condition_target must be >= 1");
  require_exponent(spec.p);
  const double q = std::isnan(spec.q) ? spec.p : spec.q;
  require_exponent(q);

  Rng rng(spec.seed);
  switch (spec.kind) {
    case GenKind::RandomPasf:
      for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        FramePair pair(rng.matrix(spec.n, spec.d), rng.matrix(spec.d, spec.n), spec.p, q);
        const auto cls = classify(pair, spec.condition_target);
        if (cls.kind != PasfKind::NotPasf) return pair;
      }
      break;
    case GenKind::HilbertFrame:
      for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        FramePair pair = FramePair::hilbert(rng.matrix(spec.d, spec.n));
        if (classify(pair, spec.condition_target).kind != PasfKind::NotPasf) return pair;
      }
      break;
    case GenKind::Riesz:
      if (spec.n != spec.d) throw InvalidArgument("RIESZ pairs need n = d");
      for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        Matrix f = rng.matrix(spec.n, spec.d);
        Matrix t = rng.matrix(spec.d, spec.n);
        if (!well_conditioned(f, spec.condition_target) || !well_conditioned(t, spec.condition_target)) continue;
        FramePair pair(std::move(f), std::move(t), spec.p, q);
        if (classify(pair, spec.condition_target).kind != PasfKind::NotPasf) return pair;
      }
      break;
    case GenKind::Tight:
      return FramePair::hilbert(tight_vectors(spec, rng));
  }
  throw GenerationFailed("no admissible pair after " + std::to_string(kMaxResamples) + " draws");
}

FramePair ill_conditioned_pasf(std::size_t d, std::size_t n, double p, double condition,
                               std::uint64_t seed) {
  if (d < 2) throw InvalidArgument("ill_conditioned_pasf needs d >= 2");
  if (!(condition >= 1.0)) throw InvalidArgument("condition must be >= 1");
  GenSpec spec{.d = d, .n = n, .p = p, .seed = seed, .kind = GenKind::RandomPasf,
               .condition_target = 100.0};
  const FramePair base = generate(spec);

  // Coordinate change x = D x' with D = diag(1, ..., 1, delta), then T scaled
  // by delta: F' = F D, T' = delta D^{-1} T, S' = delta D^{-1} S D.
  auto scaled = [&](double delta) {
    Matrix f = base.functionals();
    Matrix t = base.vectors();
    for (std::size_t k = 0; k < n; ++k) f(k, d - 1) *= delta;
    for (std::size_t i = 0; i + 1 < d; ++i)
      for (std::size_t k = 0; k < n; ++k) t(i, k) *= delta;
    return FramePair(std::move(f), std::move(t), p, p);
  };

  double delta = 1.0 / std::sqrt(condition);
  for (int it = 0; it < 60; ++it) {
    FramePair pair = scaled(delta);
    const double c = condition_number(frame_operator(pair));
    if (std::abs(std::log(c / condition)) < std::log(1.5)) return pair;
    delta *= std::sqrt(c / condition);
    if (delta >= 1.0) delta = 0.5;
  }
  throw GenerationFailed("could not reach the requested condition number");
}

}  // namespace framekit
