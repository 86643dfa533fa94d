#pragma once

#include "hodgecalc/filtration.hpp"

#include <optional>

namespace hodgecalc {

class NotNilpotent : public std::runtime_error {
public:
    explicit NotNilpotent(const std::string& msg) : std::runtime_error(msg) {}
};

class NPreservesWViolated : public std::runtime_error {
public:
    explicit NPreservesWViolated(const std::string& msg) : std::runtime_error(msg) {}
};

class FiltrationNotAdapted : public std::runtime_error {
public:
    explicit FiltrationNotAdapted(const std::string& msg) : std::runtime_error(msg) {}
};

struct NilpotentOp {
    Matrix N;
    size_t ambient_dim = 0;
    size_t nilpotency_index = 0; // smallest e with N^e = 0

    /// Throws NotNilpotent if N^dim != 0.
    static NilpotentOp make(const Matrix& N);
};

/// Increasing filtration with integer indices and a center w such that
/// N W_k <= W_{k-2} and N^k : Gr_{w+k} ~ Gr_{w-k}.
struct WeightFiltration {
    long center = 0;
    FlagFiltration filtration;

    Subspace at(long k) const { return filtration.at(Rational(k)); }
    std::vector<std::pair<long, size_t>> graded_dims() const;
};

/// The unique filtration with N W_k <= W_{k-2} and N^k inducing isomorphisms
/// Gr_{w+k} -> Gr_{w-k}, built from sums of ker N^a  intersected with  im N^b.
/// The result is verified against both characterizing conditions.
WeightFiltration monodromy_weight_filtration(const NilpotentOp& N, long w);

/// Check the two characterizing conditions for a candidate.
bool is_monodromy_weight_filtration(const Matrix& N, const WeightFiltration& W);

/// Dimension of Gr_k and the matrix induced by A on Gr_k -> Gr_m
/// (A must map W_k into W_m).
struct GradedPiece {
    long level = 0;
    QuotientMap quot; // from W.at(level) mod W.at(level-1)
    Subspace space;   // W.at(level), for reference
};
GradedPiece graded_piece(const WeightFiltration& W, long k);
Matrix induced_on_graded(const Matrix& A, const WeightFiltration& W, long from, long to);

/// Relative monodromy filtration of N with respect to W (levels centered at
/// their own index). Returns nullopt if it does not exist. Throws
/// NPreservesWViolated if N does not preserve W. The result is re-verified
/// against the characterizing conditions, never trusted from construction.
std::optional<WeightFiltration> relative_monodromy_filtration(const NilpotentOp& N,
                                                              const FlagFiltration& W);

/// Primitive subspaces P_l = ker(N^{l-w+1} on Gr_l) for l >= w, given W = W(N, w).
/// Returned in Gr_l-coordinates of graded_piece(W, l), plus ambient representatives.
struct PrimitivePart {
    long level = 0;
    Subspace in_graded;       // inside Q(i)^{dim Gr_l}
    Matrix representatives;   // rows: ambient lifts of the basis of in_graded
};
std::vector<PrimitivePart> primitive_parts(const NilpotentOp& N, const WeightFiltration& W);

} // namespace hodgecalc
