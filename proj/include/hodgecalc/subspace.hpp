#pragma once

#include "hodgecalc/matrix.hpp"

namespace hodgecalc {

/// Subspace of Q(i)^n, stored as a reduced-echelon basis (rows).
/// Two subspaces are equal iff their stored forms are identical.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Row span of `rows` inside Q(i)^{rows.cols()}.
    static Subspace span(const Matrix& rows);
    static Subspace span(size_t ambient_dim, const std::vector<std::vector<Scalar>>& vectors);
    static Subspace full(size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }
    static Subspace zero(size_t ambient_dim) { return Subspace(ambient_dim); }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Scalar> basis_vector(size_t k) const { return basis_.row(k); }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& o) const;
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Coordinates of v in this basis; throws if v is outside the span.
    std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const;

private:
    size_t ambient_ = 0;
    Matrix basis_; // dim x ambient, reduced echelon, no zero rows
};

Subspace kernel(const Matrix& A);
Subspace image(const Matrix& A);
Subspace sum(const Subspace& U, const Subspace& V);
Subspace intersect(const Subspace& U, const Subspace& V);

/// Image of a subspace under a matrix.
Subspace apply(const Matrix& A, const Subspace& U);
Subspace preimage(const Matrix& A, const Subspace& U);

/// Quotient V/U for U <= V: the projection matrix (dim V - dim U) x ambient
/// (zero on U, coordinates in the induced basis otherwise) and the chosen
/// section rows representing the induced basis of V/U inside the ambient space.
struct QuotientMap {
    Matrix projection;
    Matrix section; // (dim V - dim U) x ambient
};
QuotientMap quotient_map(const Subspace& V, const Subspace& U);

/// Matrix of A restricted to U, in the basis of U. Throws if A U is not inside U.
Matrix restrict_to(const Matrix& A, const Subspace& U);

/// Matrix of the map U -> W induced by A, in the stored bases. Throws if A U is not inside W.
Matrix induced_map(const Matrix& A, const Subspace& U, const Subspace& W);

} // namespace hodgecalc
