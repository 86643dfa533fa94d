#pragma once

#include "hodgecalc/scalar.hpp"

#include <initializer_list>
#include <vector>

namespace hodgecalc {

class dimension_error : public std::runtime_error {
public:
    explicit dimension_error(const std::string& msg) : std::runtime_error(msg) {}
};

class singular_error : public std::runtime_error {
public:
    explicit singular_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dense matrix over Q(i). All operations are exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(size_t n);
    static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }
    static Matrix row_vector(const std::vector<Scalar>& v);
    static Matrix column_vector(const std::vector<Scalar>& v);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    Scalar& operator()(size_t r, size_t c) { return at(r, c); }
    const Scalar& operator()(size_t r, size_t c) const { return at(r, c); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;

    Matrix transpose() const;
    Matrix conj() const;                 // entrywise conjugation
    Matrix conj_transpose() const { return conj().transpose(); }

    Matrix pow(size_t e) const;

    std::vector<Scalar> row(size_t r) const;
    std::vector<Scalar> col(size_t c) const;
    Matrix rows_slice(size_t from, size_t to) const; // [from, to)
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    /// Reduced row echelon form. Returns pivot column indices.
    std::vector<size_t> rref_in_place();
    Matrix rref() const;
    size_t rank() const;

    Scalar det() const;
    Matrix inverse() const;              // throws singular_error
    bool is_invertible() const;

    /// Coefficients of the characteristic polynomial det(tI - A),
    /// c[0] + c[1] t + ... + c[n] t^n (Faddeev-LeVerrier, exact).
    std::vector<Scalar> charpoly() const;

    Scalar trace() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/// Leading-principal-minor test. For hermitian = true the input must be
/// conjugate-symmetric and the minors are checked as real rationals.
/// Throws dimension_error on non-square or non-(conjugate-)symmetric input.
bool is_positive_definite(const Matrix& G, bool hermitian);

/// One exact solution of A x = b, or empty if inconsistent.
struct SolveResult {
    bool consistent = false;
    std::vector<Scalar> x;
};
SolveResult solve(const Matrix& A, const std::vector<Scalar>& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace hodgecalc
