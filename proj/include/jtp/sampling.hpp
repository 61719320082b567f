#pragma once

#include <cstdint>
#include <utility>

#include "jtp/herm2.hpp"

namespace jtp {

/// Stateless seed mixing for per-sample substreams. Deterministic across
/// runs and platforms.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0);

/// GUE-style random Hermitian: diagonal entries Normal(0, scale^2), off
/// diagonal (x + i y) scale / sqrt(2) with x, y standard normal. The normal
/// deviates come from an explicit Box-Muller transform over mt19937_64 so
/// results do not depend on the standard library's distribution internals.
Herm2 sample_hermitian(std::uint64_t seed, double scale = 1.0);

/// Haar-flavored random unitary
/// [[cos t, e^{i p} sin t], [-e^{-i p} sin t, cos t]] . diag(e^{i u}, e^{i v})
/// with all four angles uniform in [0, 2 pi).
Unitary2 sample_unitary(std::uint64_t seed);

/// Random Hermitian involution V diag(+-1, +-1) V* with V = sample_unitary.
Herm2 sample_involution(std::uint64_t seed);

/// Seeded (A, B) pair for law checks, redrawn until A, B, and A B A are all
/// safely invertible: |det X| >= 1e-6 * max(1, |X|_F)^2. The canonical maps
/// are discontinuous across the singular set and the rank decision uses a
/// 1e-9 relative tolerance, so samples are kept three orders of magnitude
/// clear of that cliff.
std::pair<Herm2, Herm2> sample_regular_pair(std::uint64_t seed, std::uint64_t index,
                                            double scale = 1.0);

} // namespace jtp
