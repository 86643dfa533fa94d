#include "hodgecalc/subspace.hpp"

namespace hodgecalc {

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    Matrix m = rows;
    auto pivots = m.rref_in_place();
    s.basis_ = m.rows_slice(0, pivots.size());
    return s;
}

Subspace Subspace::span(size_t ambient_dim, const std::vector<std::vector<Scalar>>& vectors) {
    Matrix m(vectors.size(), ambient_dim);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim) throw dimension_error("span: length mismatch");
        for (size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
    }
    return span(m);
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw dimension_error("contains: length mismatch");
    // reduce v against the echelon basis
    std::vector<Scalar> w = v;
    for (size_t r = 0; r < basis_.rows(); ++r) {
        size_t p = 0;
        while (p < ambient_ && basis_.at(r, p).is_zero()) ++p;
        if (p == ambient_) continue;
        if (!w[p].is_zero()) {
            Scalar f = w[p]; // pivot entries are 1
            for (size_t j = p; j < ambient_; ++j) w[j] -= f * basis_.at(r, j);
        }
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw dimension_error("contains: ambient mismatch");
    for (size_t r = 0; r < o.dim(); ++r)
        if (!contains(o.basis_vector(r))) return false;
    return true;
}

std::vector<Scalar> Subspace::coordinates(const std::vector<Scalar>& v) const {
    auto res = solve(basis_.transpose(), v);
    if (!res.consistent) throw dimension_error("coordinates: vector outside subspace");
    return res.x;
}

Subspace kernel(const Matrix& A) {
    Matrix m = A;
    auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(A.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(A.cols());
        v[c] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
        basis.push_back(std::move(v));
    }
    return Subspace::span(A.cols(), basis);
}

Subspace image(const Matrix& A) { return Subspace::span(A.transpose()); }

Subspace sum(const Subspace& U, const Subspace& V) {
    if (U.ambient_dim() != V.ambient_dim()) throw dimension_error("sum: ambient mismatch");
    return Subspace::span(U.basis().vstack(V.basis()));
}

Subspace intersect(const Subspace& U, const Subspace& V) {
    if (U.ambient_dim() != V.ambient_dim()) throw dimension_error("intersect: ambient mismatch");
    if (U.is_zero() || V.is_zero()) return Subspace::zero(U.ambient_dim());
    // x = a U = b V  <=>  (a, b) in ker [U^T | -V^T]
    Matrix stacked = U.basis().transpose().hstack(-V.basis().transpose());
    Subspace k = kernel(stacked);
    std::vector<std::vector<Scalar>> vecs;
    for (size_t r = 0; r < k.dim(); ++r) {
        auto ab = k.basis_vector(r);
        std::vector<Scalar> a(ab.begin(), ab.begin() + U.dim());
        vecs.push_back(U.basis().transpose().apply(a));
    }
    return Subspace::span(U.ambient_dim(), vecs);
}

Subspace apply(const Matrix& A, const Subspace& U) {
    if (A.cols() != U.ambient_dim()) throw dimension_error("apply: shape mismatch");
    return Subspace::span(U.basis() * A.transpose());
}

Subspace preimage(const Matrix& A, const Subspace& U) {
    if (A.rows() != U.ambient_dim()) throw dimension_error("preimage: shape mismatch");
    if (U.is_full()) return Subspace::full(A.cols());
    // x with A x in U  <=>  Q A x = 0 for Q a projection annihilating U
    QuotientMap q = quotient_map(Subspace::full(U.ambient_dim()), U);
    return kernel(q.projection * A);
}

QuotientMap quotient_map(const Subspace& V, const Subspace& U) {
    if (!V.contains(U)) throw dimension_error("quotient_map: U not inside V");
    // extend the basis of U to a basis of V; the added rows are the section
    Matrix ext = U.basis();
    std::vector<size_t> chosen;
    for (size_t r = 0; r < V.dim(); ++r) {
        Matrix cand = ext.vstack(Matrix::row_vector(V.basis_vector(r)));
        if (cand.rank() > ext.rows()) {
            ext = cand;
            chosen.push_back(r);
        }
    }
    size_t q = V.dim() - U.dim();
    Matrix section(q, V.ambient_dim());
    for (size_t k = 0; k < q; ++k)
        for (size_t j = 0; j < V.ambient_dim(); ++j)
            section.at(k, j) = V.basis().at(chosen[k], j);

    // projection: x in V ->  coordinates of x in (U-basis | section) basis, keep section part.
    // Solve ext^T c = x for each ambient unit vector restricted to V is not available,
    // so build it as P = S (ext row-space coordinates): for x in V, x = ext^T c,
    // and P x = last q components of c. P = [0 I_q] (ext ext^T... ) -- do it by solving.
    // Cheaper: find M with M ext^T = [0 | I_q] by solving ext M^T... We need P with
    // P x = c_{U..} for x in V. Take pseudo-solve: since ext has full row rank,
    // pick pivot columns J of ext so ext[:,J] is invertible; then c = ext[:,J]^{-1} x_J.
    Matrix extr = ext;
    auto pivots = extr.rref_in_place();
    Matrix sq(ext.rows(), ext.rows());
    for (size_t i = 0; i < ext.rows(); ++i)
        for (size_t j = 0; j < ext.rows(); ++j) sq.at(i, j) = ext.at(i, pivots[j]);
    // x = ext^T c  =>  x_J = sq^T c  =>  c = (sq^{-1})^T x_J
    Matrix inv = sq.inverse();
    Matrix proj(q, V.ambient_dim());
    for (size_t k = 0; k < q; ++k)
        for (size_t j = 0; j < ext.rows(); ++j)
            proj.at(k, pivots[j]) = inv.at(j, U.dim() + k);
    // proj currently reads off coordinates from the pivot columns only; correct on V
    // because x_J determines x for x in the row space of ext.
    return QuotientMap{proj, section};
}

Matrix induced_map(const Matrix& A, const Subspace& U, const Subspace& W) {
    if (A.cols() != U.ambient_dim() || A.rows() != W.ambient_dim())
        throw dimension_error("induced_map: shape mismatch");
    Matrix out(W.dim(), U.dim());
    for (size_t k = 0; k < U.dim(); ++k) {
        auto img = A.apply(U.basis_vector(k));
        if (!W.contains(img)) throw dimension_error("induced_map: image leaves target subspace");
        auto c = W.coordinates(img);
        for (size_t i = 0; i < W.dim(); ++i) out.at(i, k) = c[i];
    }
    return out;
}

Matrix restrict_to(const Matrix& A, const Subspace& U) { return induced_map(A, U, U); }

} // namespace hodgecalc
