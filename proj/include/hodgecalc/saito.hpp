#pragma once

#include "hodgecalc/mhs.hpp"

namespace hodgecalc {

class NonCommutingNilpotents : public std::runtime_error {
public:
    explicit NonCommutingNilpotents(const std::string& msg) : std::runtime_error(msg) {}
};

class HypothesisWViolated : public std::runtime_error {
public:
    explicit HypothesisWViolated(const std::string& msg) : std::runtime_error(msg) {}
};

/// a_{-1} of a formal Laurent polynomial in s.
Scalar laurent_residue(const std::map<long, Scalar>& series);

/// Truncated geometric expansion (s - N)^{-1} = sum_j N^j s^{-1-j}.
std::map<long, Matrix> geometric_inverse(const Matrix& N, size_t terms);

/// The l-dimensional shift structure with its antidiagonal pairing
/// S'(N'^i, N'^j) = (-1)^i when i + j = l - 1.
struct JordanRing {
    size_t l = 0;
    Matrix shift;   // N'
    Matrix pairing; // S'
};
JordanRing jordan_ring(size_t l);

/// Truncation projection J_l -> J_{l-1} (top power to zero).
Matrix jordan_can(size_t l);
/// Shift inclusion J_{l-1} -> J_l (multiplication by N').
Matrix jordan_var(size_t l);

struct PolarizedInput {
    size_t dim = 0;
    FlagFiltration F;            // decreasing
    FlagFiltration W;            // increasing, = monodromy filtration of sum N_i shifted by w
    std::vector<Matrix> N_list;  // commuting nilpotents
    std::vector<long> m_list;    // positive multiplicities, defaults to 1
    Matrix S;
    long w = 0;

    /// Validates commutativity and the W hypothesis.
    static PolarizedInput make(size_t dim, FlagFiltration F, FlagFiltration W,
                               std::vector<Matrix> N_list, std::vector<long> m_list, Matrix S,
                               long w);
};

struct ExtendedStructure {
    size_t dim = 0;                  // l * dim H
    size_t l = 0;                    // |I|
    long weight = 0;                 // w + l - 1
    Matrix s_action;                 // multiplication by s on the quotient
    std::vector<Matrix> N_tilde;     // N_i + m_i s
    Matrix total_nilpotent;          // s + sum (N_i + m_i s)
    FlagFiltration F;                // shifted Hodge filtration
    FlagFiltration W_shifted;        // degreewise-shifted input W (construction data)
    WeightFiltration W;              // monodromy filtration of the total nilpotent
    Matrix S_tilde;
};

/// Extension across the stratum indexed by I (0-based indices into N_list).
ExtendedStructure extend(const PolarizedInput& in, const std::vector<size_t>& I);

struct WeightCheck {
    bool axioms = false;        // both weight-filtration axioms for the total nilpotent
    bool center_ok = false;     // centered at w + l - 1
    bool matches_recomputed = false;
    std::vector<std::pair<long, size_t>> graded_dims;
    bool passed = false;
};
WeightCheck weight_check(const ExtendedStructure& ext, const PolarizedInput& in);

/// Searches for a degree-triangular congruence from S_tilde to S (x) S'(l).
/// Returns the transform when found.
std::optional<Matrix> tensor_congruence(const ExtendedStructure& ext, const PolarizedInput& in);

} // namespace hodgecalc
