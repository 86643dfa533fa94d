#pragma once

#include "hodgecalc/matrix.hpp"

#include <cstdint>

namespace hodgecalc {

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform for a given seed, so seeded runs are bit-reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    /// Uniform integer in [-m, m].
    long small_int(long m) { return static_cast<long>(below(2 * m + 1)) - m; }

    Matrix matrix(size_t rows, size_t cols, long m) {
        Matrix A(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) A.at(i, j) = Scalar(small_int(m));
        return A;
    }

    /// Random nilpotent matrix: strictly upper triangular conjugated by a
    /// random invertible integer matrix.
    Matrix nilpotent(size_t n, long m = 2) {
        Matrix U(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) U.at(i, j) = Scalar(small_int(m));
        Matrix P = invertible(n, m);
        return P * U * P.inverse();
    }

    Matrix invertible(size_t n, long m = 2) {
        for (;;) {
            Matrix P = matrix(n, n, m);
            if (P.is_invertible()) return P;
        }
    }

    /// Random unipotent matrix (identity plus nilpotent).
    Matrix unipotent(size_t n, long m = 2) { return Matrix::identity(n) + nilpotent(n, m); }

private:
    uint64_t state_;
};

} // namespace hodgecalc
