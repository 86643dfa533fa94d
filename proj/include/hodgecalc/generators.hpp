#pragma once

// Seeded generators shared by the verification suites and the tests.

#include "hodgecalc/rng.hpp"
#include "hodgecalc/saito.hpp"

namespace hodgecalc {

/// Nilpotent together with a nondegenerate pairing of the requested symmetry
/// satisfying S(N x, y) + S(x, N y) = 0, built blockwise and conjugated by a
/// random base change. The dimension may grow by one block when the parity
/// cannot be met exactly at the requested size.
struct CompatiblePair {
    Matrix N;
    Matrix S;
};
CompatiblePair random_isometry_pair(Rng& rng, size_t target_dim, bool symmetric);

/// PolarizedInput with `ops` commuting operators (odd polynomials in a common
/// nilpotent), pairing compatible per random_isometry_pair, and W the
/// monodromy filtration of the sum shifted by w.
PolarizedInput random_polarized_input(Rng& rng, size_t target_dim, size_t ops, long w,
                                      bool even_weight);

} // namespace hodgecalc
