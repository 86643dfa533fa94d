#include "hodgecalc/cyclotomic.hpp"

#include <numeric>
#include <set>

namespace hodgecalc {

PolyQ PolyQ::x_pow_minus_one(unsigned n) {
    std::vector<Rational> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return PolyQ(std::move(c));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& d) const {
    if (d.is_zero()) throw std::domain_error("poly divmod: zero divisor");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo;
    long dd = d.degree();
    if (degree() >= dd) quo.assign(degree() - dd + 1, Rational(0));
    for (long k = degree(); k >= dd; --k) {
        Rational f = rem[k] / d.c_.back();
        if (f == 0) continue;
        quo[k - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ cyclotomic_poly(unsigned m) {
    static std::map<unsigned, PolyQ> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    PolyQ num = PolyQ::x_pow_minus_one(m);
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = num.divmod(cyclotomic_poly(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic recursion: inexact division");
        num = q;
    }
    cache[m] = num;
    return num;
}

std::multiset<Rational> cyclotomic_exponents(const Matrix& T, unsigned bound) {
    if (!T.is_square()) throw dimension_error("cyclotomic_exponents: not square");
    for (size_t i = 0; i < T.rows(); ++i)
        for (size_t j = 0; j < T.cols(); ++j)
            if (!T.at(i, j).is_real())
                throw dimension_error("cyclotomic_exponents: matrix must be rational");
    if (!T.is_invertible()) throw dimension_error("cyclotomic_exponents: matrix not invertible");

    auto cp = T.charpoly();
    std::vector<Rational> coeffs(cp.size());
    for (size_t k = 0; k < cp.size(); ++k) coeffs[k] = cp[k].as_rational();
    PolyQ p(std::move(coeffs));

    std::multiset<Rational> exps;
    for (unsigned m = 1; m <= bound && p.degree() > 0; ++m) {
        PolyQ phi = cyclotomic_poly(m);
        while (p.degree() >= phi.degree()) {
            auto [q, r] = p.divmod(phi);
            if (!r.is_zero()) break;
            p = q;
            for (unsigned k = 0; k < m; ++k)
                if (std::gcd(k, m) == 1) exps.insert(Rational(k, m));
        }
    }
    if (p.degree() > 0)
        throw NotQuasiUnipotent("non-cyclotomic factor of degree " +
                                std::to_string(p.degree()) + " remains within order bound");
    return exps;
}

} // namespace hodgecalc
