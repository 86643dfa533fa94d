#pragma once

#include "hodgecalc/weightfilt.hpp"

#include <map>
#include <optional>

namespace hodgecalc {

class WeightMismatch : public std::runtime_error {
public:
    explicit WeightMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

class NonHermitianGram : public std::runtime_error {
public:
    explicit NonHermitianGram(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bigraded (split) mixed Hodge structure. W and F are always recomputed
/// from the bigrading. Conjugation is the semilinear map x -> C conj(x).
class SplitMHS {
public:
    static SplitMHS make(size_t dim, std::map<std::pair<long, long>, Subspace> pieces,
                         Matrix conj);

    size_t dim() const { return dim_; }
    const std::map<std::pair<long, long>, Subspace>& pieces() const { return pieces_; }
    const Matrix& conj_matrix() const { return conj_; }

    std::vector<Scalar> conjugate(const std::vector<Scalar>& x) const;

    /// W_k = span of pieces with p + q <= k (increasing, integer indices).
    FlagFiltration weight_filtration() const;
    /// F^p = span of pieces with first index >= p (decreasing).
    FlagFiltration hodge_filtration() const;

    std::vector<long> weight_levels() const; // distinct p+q present, ascending
    Subspace level_subspace(long w) const;   // span of pieces with p+q = w
    bool is_pure() const { return weight_levels().size() <= 1; }

    SplitMHS tate_twist(long k) const;

private:
    size_t dim_ = 0;
    std::map<std::pair<long, long>, Subspace> pieces_;
    Matrix conj_;
};

struct Polarization {
    long weight = 0;
    Matrix S;

    /// Checks S(x,y) = (-1)^n S(y,x).
    static Polarization make(long weight, Matrix S);
};

struct BilinearRelationReport {
    bool holds = false;
    // first violating pair of bigraded types, if any
    std::optional<std::pair<std::pair<long, long>, std::pair<long, long>>> witness;
};

/// First bilinear relation S(F^p, F^q) = 0 for p + q > n on a pure weight-n
/// structure. Throws WeightMismatch if H is not pure of the polarization's
/// weight.
BilinearRelationReport check_first_bilinear_relation(const SplitMHS& H, const Polarization& S);

struct PositivityBlock {
    long level = 0; // weight level of the primitive piece
    long p = 0, q = 0;
    size_t dim = 0;
    Scalar unit;     // member of {1,-1,i,-i} making the block hermitian
    bool positive = false; // after unit normalization;  definite = positive||negative
    bool negative = false;
};

struct PositivityReport {
    bool orthogonal = false; // distinct bigraded blocks pair to zero
    bool definite = false;   // every block definite after one overall unit per level
    std::vector<PositivityBlock> blocks;
};

/// Second bilinear relation on the primitive parts of W(N, w): on each
/// P_l-block the Gram h(x, y) = i^{p-q} S(x, N^{l-w} conj(y)) must be
/// definite after one overall unit normalization per level ("definite up to
/// one overall sign"; the extra i absorbs the odd-weight Weil parity).
/// Throws NonHermitianGram when no unit makes a block hermitian.
PositivityReport check_positivity(const SplitMHS& H, const Polarization& S,
                                  const NilpotentOp& N);

struct AdmissibilityReport {
    bool relative_filtration_exists = false;
    bool n_preserves_w = false;
    bool graded_polarizations_ok = false;
    std::vector<std::string> reasons;
    bool admissible = false;
};

/// Admissibility: the relative monodromy filtration of N with respect to
/// W(H) exists, and every weight-graded piece passes both bilinear-relation
/// checks against its graded polarization.
AdmissibilityReport check_admissibility(const SplitMHS& H, const NilpotentOp& N,
                                        const std::map<long, Matrix>& graded_polarizations);

/// Variant taking a free-standing W (for probing filtrations the bigrading
/// does not induce).
AdmissibilityReport check_admissibility(const FlagFiltration& W, const SplitMHS& H,
                                        const NilpotentOp& N,
                                        const std::map<long, Matrix>& graded_polarizations);

} // namespace hodgecalc
