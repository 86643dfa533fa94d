#include "hodgecalc/matrix.hpp"

#include <ostream>

namespace hodgecalc {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_error("ragged initializer");
        for (const auto& x : r) e_.push_back(x);
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::row_vector(const std::vector<Scalar>& v) {
    Matrix m(1, v.size());
    for (size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& v) {
    Matrix m(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix add: shape mismatch");
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix sub: shape mismatch");
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix mul: shape mismatch");
    Matrix m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::conj() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].conj();
    return m;
}

Matrix Matrix::pow(size_t e) const {
    if (!is_square()) throw dimension_error("matrix pow: not square");
    Matrix acc = identity(rows_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<Scalar> Matrix::row(size_t r) const {
    std::vector<Scalar> v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

std::vector<Scalar> Matrix::col(size_t c) const {
    std::vector<Scalar> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

Matrix Matrix::rows_slice(size_t from, size_t to) const {
    Matrix m(to - from, cols_);
    for (size_t i = from; i < to; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i - from, j) = at(i, j);
    return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw dimension_error("hstack: row mismatch");
    Matrix m(rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (o.rows_ == 0) return *this;
    if (rows_ == 0) {
        if (cols_ != 0 && cols_ != o.cols_) throw dimension_error("vstack: col mismatch");
        return o;
    }
    if (cols_ != o.cols_) throw dimension_error("vstack: col mismatch");
    Matrix m(rows_ + o.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw dimension_error("apply: length mismatch");
    std::vector<Scalar> out(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Scalar acc;
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<size_t> Matrix::rref_in_place() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && at(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Scalar inv = Scalar(1) / at(r, c);
        for (size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Scalar f = at(i, c);
            for (size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Matrix Matrix::rref() const {
    Matrix m = *this;
    m.rref_in_place();
    return m;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
}

Scalar Matrix::det() const {
    if (!is_square()) throw dimension_error("det: not square");
    Matrix m = *this;
    Scalar d(1);
    for (size_t c = 0; c < cols_; ++c) {
        size_t p = c;
        while (p < rows_ && m.at(p, c).is_zero()) ++p;
        if (p == rows_) return Scalar(0);
        if (p != c) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Scalar inv = Scalar(1) / m.at(c, c);
        for (size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * inv;
            for (size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

bool Matrix::is_invertible() const { return is_square() && rank() == rows_; }

Matrix Matrix::inverse() const {
    if (!is_square()) throw dimension_error("inverse: not square");
    Matrix aug = hstack(identity(rows_));
    auto pivots = aug.rref_in_place();
    if (pivots.size() != rows_ || (rows_ && pivots.back() >= rows_))
        throw singular_error("inverse: singular matrix");
    Matrix inv(rows_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
    return inv;
}

std::vector<Scalar> Matrix::charpoly() const {
    if (!is_square()) throw dimension_error("charpoly: not square");
    size_t n = rows_;
    // Faddeev-LeVerrier: M_0 = I, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    Matrix M = identity(n);
    for (size_t k = 1; k <= n; ++k) {
        M = (*this) * M;
        Scalar ck = -(M.trace() / Scalar(static_cast<long>(k)));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) M.at(i, i) += ck;
    }
    return c;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw dimension_error("trace: not square");
    Scalar t;
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool is_positive_definite(const Matrix& G, bool hermitian) {
    if (!G.is_square()) throw dimension_error("is_positive_definite: not square");
    if (hermitian) {
        if (G != G.conj_transpose())
            throw dimension_error("is_positive_definite: not conjugate-symmetric");
    } else {
        if (G != G.transpose()) throw dimension_error("is_positive_definite: not symmetric");
        for (size_t i = 0; i < G.rows(); ++i)
            for (size_t j = 0; j < G.cols(); ++j)
                if (!G.at(i, j).is_real())
                    throw dimension_error("is_positive_definite: non-real symmetric input");
    }
    for (size_t k = 1; k <= G.rows(); ++k) {
        Matrix lead(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead.at(i, j) = G.at(i, j);
        Scalar d = lead.det();
        if (!d.is_real()) return false; // cannot happen for genuinely hermitian input
        if (!(d.as_rational() > 0)) return false;
    }
    return true;
}

SolveResult solve(const Matrix& A, const std::vector<Scalar>& b) {
    if (b.size() != A.rows()) throw dimension_error("solve: length mismatch");
    Matrix aug = A.hstack(Matrix::column_vector(b));
    auto pivots = aug.rref_in_place();
    SolveResult res;
    if (!pivots.empty() && pivots.back() == A.cols()) return res; // row [0..0 | 1]
    res.consistent = true;
    res.x.assign(A.cols(), Scalar(0));
    for (size_t r = 0; r < pivots.size(); ++r) res.x[pivots[r]] = aug.at(r, A.cols());
    return res;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

} // namespace hodgecalc
