#include "hodgecalc/generators.hpp"

namespace hodgecalc {

CompatiblePair random_isometry_pair(Rng& rng, size_t target_dim, bool symmetric) {
    // assemble blocks: a size-m shift block carries a natural pairing of
    // symmetry (-1)^{m-1}; blocks of the wrong parity are doubled and paired
    // off-diagonally
    struct Piece {
        size_t m;
        bool doubled;
    };
    std::vector<Piece> pieces;
    size_t used = 0;
    while (used < target_dim) {
        size_t m = 1 + rng.below(std::min<size_t>(3, target_dim - used));
        bool natural = ((m % 2 == 1) == symmetric);
        if (!natural && used + 2 * m > target_dim) {
            if (used + 2 <= target_dim && symmetric == false) {
                pieces.push_back({1, true}); // paired singles carry either parity
                used += 2;
                continue;
            }
            if (symmetric) {
                pieces.push_back({1, false});
                used += 1;
                continue;
            }
            break;
        }
        pieces.push_back({m, !natural});
        used += natural ? m : 2 * m;
    }
    if (used == 0) {
        pieces.push_back({1, !symmetric});
        used = symmetric ? 1 : 2;
    }

    size_t n = used;
    Matrix N = Matrix::zero(n, n);
    Matrix S = Matrix::zero(n, n);
    size_t off = 0;
    Scalar eps = symmetric ? Scalar(1) : Scalar(-1);
    for (const auto& pc : pieces) {
        JordanRing ring = jordan_ring(pc.m);
        Scalar scale(rng.small_int(2) * 2 + 1); // odd, never zero
        if (!pc.doubled) {
            for (size_t i = 0; i < pc.m; ++i)
                for (size_t j = 0; j < pc.m; ++j) {
                    N.at(off + i, off + j) = ring.shift.at(i, j);
                    S.at(off + i, off + j) = ring.pairing.at(i, j) * scale;
                }
            off += pc.m;
        } else {
            for (size_t copy = 0; copy < 2; ++copy)
                for (size_t i = 0; i < pc.m; ++i)
                    for (size_t j = 0; j < pc.m; ++j)
                        N.at(off + copy * pc.m + i, off + copy * pc.m + j) =
                            ring.shift.at(i, j);
            for (size_t i = 0; i < pc.m; ++i)
                for (size_t j = 0; j < pc.m; ++j) {
                    Scalar a = ring.pairing.at(i, j) * scale;
                    S.at(off + i, off + pc.m + j) = a;
                    S.at(off + pc.m + j, off + i) = a * eps;
                }
            off += 2 * pc.m;
        }
    }
    Matrix P = rng.invertible(n, 1);
    Matrix Pi = P.inverse();
    return CompatiblePair{P * N * Pi, Pi.transpose() * S * Pi};
}

PolarizedInput random_polarized_input(Rng& rng, size_t target_dim, size_t ops, long w,
                                      bool even_weight) {
    CompatiblePair base = random_isometry_pair(rng, target_dim, even_weight);
    size_t n = base.N.rows();
    Matrix N3 = base.N * base.N * base.N;
    std::vector<Matrix> Ns;
    for (size_t i = 0; i < ops; ++i) {
        long c = i == 0 ? 1 : 1 + static_cast<long>(rng.below(3));
        Matrix Ni = base.N * Scalar(c) + N3 * Scalar(rng.small_int(1));
        Ns.push_back(Ni);
    }
    Matrix total = Matrix::zero(n, n);
    for (const auto& N : Ns) total = total + N;
    WeightFiltration W = monodromy_weight_filtration(NilpotentOp::make(total), w);
    FlagFiltration F =
        FlagFiltration::from_steps(n, false, {{Rational(0), Subspace::full(n)}});
    return PolarizedInput::make(n, F, W.filtration, Ns, {}, base.S, w);
}

} // namespace hodgecalc
