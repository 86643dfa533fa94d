#pragma once

#include "hodgecalc/matrix.hpp"

#include <map>
#include <set>

namespace hodgecalc {

class NotQuasiUnipotent : public std::runtime_error {
public:
    explicit NotQuasiUnipotent(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dense polynomial over Q, coefficients low-degree first.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyQ constant(Rational r) { return PolyQ({std::move(r)}); }
    static PolyQ x_pow_minus_one(unsigned n); // t^n - 1

    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const;

    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// The m-th cyclotomic polynomial, exact.
PolyQ cyclotomic_poly(unsigned m);

/// Exponents k/m (with multiplicity) of the eigenvalues e^{2 pi i k/m} of T,
/// found by factoring charpoly(T) into cyclotomic polynomials with orders up
/// to `bound`. Throws NotQuasiUnipotent if a non-cyclotomic factor remains.
/// T must be invertible with rational entries.
std::multiset<Rational> cyclotomic_exponents(const Matrix& T, unsigned bound = 120);

} // namespace hodgecalc
