#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

#include "framekit/pasf.hpp"

namespace framekit {

enum class GenKind { RandomPasf, HilbertFrame, Riesz, Tight };

std::string_view to_string(GenKind kind);
/// Accepts the upper-case names (RANDOM_PASF, ...) and lower-case aliases.
std::optional<GenKind> parse_gen_kind(std::string_view name);

struct GenSpec {
  std::size_t d = 2;
  std::size_t n = 3;
  double p = 2.0;
  /// Defaults to p when NaN.
  double q = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t seed = 0;
  GenKind kind = GenKind::RandomPasf;
  /// Upper bound on cond(S) (and on cond(F), cond(T) for Riesz pairs).
  double condition_target = 1e6;
  /// TIGHT with d = 2, n = 3: emit the Mercedes-Benz frame.
  bool mercedes = false;
};

inline constexpr int kMaxResamples = 1000;

/// Deterministic for a fixed spec.
///  - RANDOM_PASF: F and T uniform in [-1, 1], resampled until the pair is a
///    p-ASF with cond(S) <= condition_target.
///  - HILBERT_FRAME: T uniform, F = T^T, p = q = 2.
///  - RIESZ: n = d, F and T invertible; a p-approximate Riesz basis.
///  - TIGHT: a Hilbert frame with S = (n/d) I (union of rotated orthonormal
///    bases when d divides n, a rotated harmonic frame when d = 2, otherwise
///    the canonical tight frame S^{-1/2} T of a random frame).
/// Throws InvalidArgument for n < d or RIESZ with n != d, and
/// GenerationFailed after kMaxResamples rejected draws.
FramePair generate(const GenSpec& spec);

/// tau_k = (cos(pi/2 + 2 pi k/3), sin(pi/2 + 2 pi k/3)), f_k = <., tau_k>.
FramePair mercedes_pair();

/// A p-ASF whose frame operator has 2-norm condition close to `condition`
/// (within a factor 1.5), obtained by rescaling one coordinate of X in a
/// well-conditioned random pair. All entries of F and T stay in [-1, 1].
/// Requires d >= 2.
FramePair ill_conditioned_pasf(std::size_t d, std::size_t n, double p, double condition,
                               std::uint64_t seed);

}  // namespace framekit
