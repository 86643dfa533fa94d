#pragma once

#include "hodgecalc/subspace.hpp"

namespace hodgecalc {

class InvertibilityFailed : public std::runtime_error {
public:
    explicit InvertibilityFailed(const std::string& msg) : std::runtime_error(msg) {}
};

class NotUnipotent : public std::runtime_error {
public:
    explicit NotUnipotent(const std::string& msg) : std::runtime_error(msg) {}
};

/// Quiver presentation of a perverse sheaf on the disk:
/// psi --c--> phi --v--> psi.
struct DiskQuiver {
    size_t psi_dim = 0, phi_dim = 0;
    Matrix c; // phi_dim x psi_dim
    Matrix v; // psi_dim x phi_dim

    static DiskQuiver make(size_t psi_dim, size_t phi_dim, Matrix c, Matrix v);
};

/// T = id + v c on psi.
Matrix monodromy(const DiskQuiver& q);

/// Both 1 - u v and 1 - v u invertible (u: V1 -> V0, v: V0 -> V1).
bool check_invertibility(const Matrix& u, const Matrix& v);

/// Projection onto the generalized 0-eigenspace of A along its invertible
/// part, as a polynomial in A (so it commutes with everything commuting
/// with A).
Matrix nilpotent_part_projection(const Matrix& A);

/// Image of a diagram (V0, V1, u, v) in the monodromy presentation:
/// the nilpotent part of (V0, uv), the automorphism id - vu of V1, and the
/// restrictions of u, v between the distinguished subspaces.
struct BeilinsonImage {
    Subspace v0_nilpotent; // inside V0
    Subspace v1_nilpotent; // inside V1: nilpotent part of (V1, vu)
    Matrix phi;            // id - v u, an automorphism of V1
    Matrix u_restricted;   // v1_nilpotent -> v0_nilpotent, in their bases
    Matrix v_restricted;   // v0_nilpotent -> v1_nilpotent
};
BeilinsonImage beilinson_functor(const Matrix& u, const Matrix& v);

/// Applies the functor, rebuilds a diagram from its image, and returns the
/// explicit comparison maps; natural_iso is true when they intertwine u, v
/// and are invertible.
struct BeilinsonRoundTrip {
    bool natural_iso = false;
    Matrix f0; // V0 -> reconstructed V0
    Matrix f1; // V1 -> V1
};
BeilinsonRoundTrip beilinson_roundtrip(const Matrix& u, const Matrix& v);

/// The three extensions of a local system (L, T) across the puncture.
/// T must be rational and quasi-unipotent; the non-unipotent part is split
/// off spectrally and extended with c, v both isomorphisms.
DiskQuiver extend_shriek(const Matrix& T, unsigned cyclotomic_bound = 120);
DiskQuiver extend_star(const Matrix& T, unsigned cyclotomic_bound = 120);
DiskQuiver intermediate_extension(const Matrix& T, unsigned cyclotomic_bound = 120);

struct VanishingDecomposition {
    Subspace im_c;
    Subspace ker_v;
    bool spans = false;
    bool direct = false;
    bool holds = false; // phi = im c (+) ker v
};
VanishingDecomposition vanishing_decomposition(const DiskQuiver& q);

/// c surjective and v injective; equivalently no nonzero sub- or quotient
/// quiver supported at the origin.
struct MinimalityReport {
    bool c_surjective = false;
    bool v_injective = false;
    Subspace sub_at_origin;    // largest subobject with psi = 0 (inside phi)
    size_t quotient_at_origin_dim = 0; // dim coker c
    bool minimal = false;
};
MinimalityReport minimality_report(const DiskQuiver& q);

DiskQuiver dual(const DiskQuiver& q);

/// Quiver morphisms (a, b) with b c = c' a and a v = v' b.
bool is_quiver_morphism(const DiskQuiver& q, const DiskQuiver& q2, const Matrix& a,
                        const Matrix& b);

/// The comparison map j_! -> j_* for the system tensored with the rank-n
/// unipotent log block: the map is (id, N) on (V, V) with V = L (x) J^{0,n}.
/// Its kernel has the dimension of the nearby space once n reaches the
/// nilpotency index, and it is an isomorphism only in the degenerate case.
struct ShriekStarComparison {
    size_t tensored_dim = 0;
    size_t kernel_dim = 0;
    size_t cokernel_dim = 0;
    bool iso = false;
};
ShriekStarComparison shriek_star_comparison(const Matrix& T, size_t n);

} // namespace hodgecalc
