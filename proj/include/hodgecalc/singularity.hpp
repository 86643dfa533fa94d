#pragma once

#include "hodgecalc/mhs.hpp"

namespace hodgecalc {

/// Diagonal singularity f = x_1^{a_1} + ... + x_{n+1}^{a_{n+1}}, all a_i >= 2.
struct BPSingularity {
    std::vector<unsigned> exponents;

    static BPSingularity make(std::vector<unsigned> exponents);
    size_t num_vars() const { return exponents.size(); }
    long n() const { return static_cast<long>(exponents.size()) - 1; }
};

size_t milnor_number(const BPSingularity& f);

struct SpectrumEntry {
    std::vector<unsigned> monomial; // exponent vector k, 0 <= k_i <= a_i - 2
    Rational l;                     // sum (k_i + 1) / a_i
    Rational alpha;                 // l - 1
};

/// All Milnor-algebra monomials with their spectral numbers, sorted by
/// (l, lexicographic). The lexicographic tie-break mirrors complementation,
/// which keeps the residue Gram antidiagonal.
std::vector<SpectrumEntry> spectrum(const BPSingularity& f);

struct OmegaF {
    BPSingularity f;
    size_t mu = 0;
    std::vector<SpectrumEntry> basis;           // sorted
    std::vector<std::pair<long, long>> types;   // (p, q) per basis monomial
    std::vector<size_t> conj_perm;              // complementary-monomial permutation
    Matrix residue;                             // Grothendieck residue Gram
    Matrix modified;                            // res(x, Ctilde y)
};

/// Bigrading: non-integer l gets (ceil(l) - 1, n - p) at weight n; integer l
/// gets (l, n + 1 - l) at weight n + 1. Conjugation is monomial complementation.
OmegaF bigrading(const BPSingularity& f);

Matrix residue_pairing(const BPSingularity& f);
Matrix modified_residue(const BPSingularity& f);

struct GoodBasisReport {
    bool antidiagonal = false;  // Gram entry (i, j) nonzero iff j = mu + 1 - i
    bool entries_unimodular = false;
    bool involution_ok = false; // kappa(i) = mu + 1 - i except the middle case
    std::vector<size_t> kappa;  // 1-indexed pairing partner
    bool ok = false;
};
GoodBasisReport good_basis_check(const BPSingularity& f);

/// Gr_F^p Gr_U^q = 0 for p != q, for two decreasing filtrations.
bool filtrations_opposite(const FlagFiltration& F, const FlagFiltration& U);

/// U from the spectral grading against F from the bigrading.
bool opposite_filtration_check(const BPSingularity& f);

/// The spectral filtration as a decreasing flag (used by the opposite check
/// and by constructed-violation tests).
FlagFiltration spectral_filtration(const OmegaF& om);
FlagFiltration hodge_filtration_of(const OmegaF& om);

struct RiemannHodgeReport {
    bool first_relation = false;
    bool orthogonal = false;
    bool definite = false;
    std::vector<PositivityBlock> blocks;
    bool ok = false;
};
RiemannHodgeReport riemann_hodge_check(const BPSingularity& f);

struct MHSPackage {
    SplitMHS structure;
    Matrix pairing;                        // the modified residue
    std::map<long, Matrix> graded;         // per-weight polarization (same matrix)
    std::vector<long> weights;
};
MHSPackage to_mhs(const BPSingularity& f);

} // namespace hodgecalc
