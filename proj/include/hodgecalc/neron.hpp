#pragma once

#include "hodgecalc/cyclotomic.hpp"
#include "hodgecalc/mhs.hpp"
#include "hodgecalc/saito.hpp"

#include <map>

namespace hodgecalc {

class DegreeBoundTooSmall : public std::runtime_error {
public:
    explicit DegreeBoundTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

class OddBoundedRank : public std::runtime_error {
public:
    explicit OddBoundedRank(const std::string& msg) : std::runtime_error(msg) {}
};

/// Boundary-degeneration data: lattice with pairing, commuting nilpotents,
/// bigrading, and the modulus parameter (nonzero imaginary part).
struct NilpotentOrbit {
    size_t lattice_dim = 0;
    Matrix Q;
    std::vector<Matrix> N_list;
    std::map<std::pair<long, long>, Subspace> bigrading; // may be empty
    Scalar omega = Scalar::i();

    static NilpotentOrbit make(size_t lattice_dim, Matrix Q, std::vector<Matrix> N_list,
                               std::map<std::pair<long, long>, Subspace> bigrading,
                               Scalar omega);
};

struct OrbitCheck {
    std::vector<bool> symmetric;       // Q(N x, y) = Q(x, N y), per operator
    std::vector<bool> antisymmetric;   // Q(N x, y) + Q(x, N y) = 0, per operator
    std::vector<bool> bigrading_shift; // N I^{p,q} inside I^{p-1,q-1}, per operator
    bool commuting = false;
    bool nilpotent = false;
};
OrbitCheck orbit_check(const NilpotentOrbit& orbit);

/// Laurent-monomial entry c * s^e in the boundary coordinates.
struct LaurentEntry {
    std::vector<long> expo; // one exponent per boundary coordinate
    Scalar coeff;
};

/// Frame generators over the boundary coordinates; generator g has one
/// LaurentEntry per lattice component (zero coefficient = absent).
struct SectionFamily {
    size_t num_coords = 0; // boundary coordinates s_1..s_k
    size_t rank = 0;       // lattice dimension
    std::vector<std::vector<LaurentEntry>> generators;

    static SectionFamily make(size_t num_coords, size_t rank,
                              std::vector<std::vector<LaurentEntry>> generators);
};

/// One relation: a polynomial coefficient per generator.
struct PolyRelation {
    // per generator: monomial exponent -> coefficient
    std::vector<std::map<std::vector<long>, Scalar>> coeffs;
};

struct Presentation {
    std::vector<PolyRelation> relations; // minimal generators, canonical form
    bool degree_bound_reached = false;   // new minimal generators at the top degree
    size_t degree_bound = 0;
};

/// Relation module among the generators, by exact linear algebra on Laurent
/// coefficients, searched up to the given total degree.
Presentation presentation(const SectionFamily& fam, size_t degree_bound = 4);

/// #generators - rank of the relations evaluated at the point.
size_t fiber_dim(const SectionFamily& fam, const Presentation& pres,
                 const std::vector<Scalar>& point);

/// Exact pairing of a frame vector against the lattice section of h:
/// terms are indexed by (z-monomial, s-monomial) and carry one linear form
/// in the lattice coordinates h_1..h_d. The lattice section is
/// -exp(-sum z_j N_j) h; s_j and z_j stay independent formal symbols
/// (s_j = e^{2 pi i z_j} is recorded alongside, never substituted).
struct ClosureTerm {
    std::vector<unsigned> z_expo;
    std::vector<long> s_expo;
    std::vector<Scalar> h_linear; // coefficient of each h-component
};
struct ClosurePolynomial {
    std::vector<ClosureTerm> terms; // sorted by (z_expo, s_expo)
};
std::vector<ClosurePolynomial> integral_closure(const NilpotentOrbit& orbit,
                                                const SectionFamily& frame);

/// Same, with h given numerically.
std::vector<ClosurePolynomial> integral_closure_at(const NilpotentOrbit& orbit,
                                                   const SectionFamily& frame,
                                                   const std::vector<Scalar>& h);

struct StratumReport {
    std::vector<bool> vanishing; // which s_j vanish on the stratum
    size_t fiber_dimension = 0;
    size_t bounded_lattice_rank = 0;
    size_t torus_rank = 0;  // bounded rank / 2
    size_t vector_dim = 0;  // fiber dim - torus rank
    bool odd_bounded_rank = false;
};

struct FiberClassification {
    std::vector<StratumReport> strata;
    bool ok = false; // no stratum failed with an odd bounded rank
};
FiberClassification fiber_classification(const NilpotentOrbit& orbit,
                                         const SectionFamily& frame,
                                         size_t degree_bound = 4);

struct DeligneFrame {
    std::multiset<Rational> residues;
    std::vector<std::string> description; // one line per eigenline
};
DeligneFrame deligne_residue_frame(const Matrix& T, unsigned cyclotomic_bound = 120);

} // namespace hodgecalc
