#include "hodgecalc/logext.hpp"

#include "hodgecalc/subspace.hpp"

namespace hodgecalc {

Scalar jab_pairing(const LogBlock& f, const LogBlock& g) {
    Scalar acc;
    for (long i = f.lo(); i < f.hi(); ++i) {
        long j = -1 - i;
        if (j < g.lo() || j >= g.hi()) continue;
        Scalar sign = (j % 2 == 0) ? Scalar(1) : Scalar(-1);
        acc += f.get(i) * g.get(j) * sign;
    }
    return acc;
}

Matrix jab_gram(long a1, long b1, long a2, long b2) {
    Matrix G(b1 - a1, b2 - a2);
    for (long i = a1; i < b1; ++i)
        for (long j = a2; j < b2; ++j)
            G.at(i - a1, j - a2) =
                jab_pairing(LogBlock::basis(a1, b1, i), LogBlock::basis(a2, b2, j));
    return G;
}

ElementarySection ElementarySection::zero(Rational alpha, long p, size_t base_dim) {
    ElementarySection x;
    x.alpha = std::move(alpha);
    x.p = p;
    x.levels.assign(p + 1, std::vector<Scalar>(base_dim));
    return x;
}

ElementarySection apply_log_monodromy(const Matrix& nu, const ElementarySection& x) {
    ElementarySection y = ElementarySection::zero(x.alpha, x.p, nu.rows());
    for (long k = 0; k <= x.p; ++k) {
        auto v = nu.apply(x.levels[k]);
        if (k + 1 <= x.p)
            for (size_t i = 0; i < v.size(); ++i) v[i] += x.levels[k + 1][i];
        y.levels[k] = std::move(v);
    }
    return y;
}

ExtendedPairing extend_pairing(const Matrix& K, const ElementarySection& x,
                               const ElementarySection& y) {
    if (x.alpha != y.alpha || x.p != y.p)
        throw IndexMismatch("extend_pairing: sections live in different modules");
    ExtendedPairing out;
    for (long k = 0; k <= x.p; ++k) {
        for (long l = 0; l <= y.p; ++l) {
            Scalar term;
            for (size_t i = 0; i < K.rows(); ++i)
                for (size_t j = 0; j < K.cols(); ++j)
                    if (!K.at(i, j).is_zero())
                        term += x.levels[k][i] * K.at(i, j) * y.levels[l][j];
            if (!term.is_zero()) out.by_degree[k + l] += term;
        }
    }
    auto it = out.by_degree.find(x.p);
    out.residue = it == out.by_degree.end() ? Scalar(0) : it->second;
    return out;
}

Matrix descended_gram(const Matrix& K, long p) {
    size_t d = K.rows();
    Matrix G(d * (p + 1), d * (p + 1));
    for (long k = 0; k <= p; ++k)
        for (long l = 0; l <= p; ++l) {
            if (k + l != p) continue;
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) G.at(k * d + i, l * d + j) = K.at(i, j);
        }
    return G;
}

ToyVModule ToyVModule::make(Rational r, long n_lo, long n_hi) {
    if (!(r > -1 && r < 0)) throw ROutOfRange("toy model requires r in (-1, 0)");
    if (n_lo > n_hi) throw dimension_error("toy model: empty window");
    return ToyVModule{std::move(r), n_lo, n_hi};
}

ToyGr toy_gr(const Rational& r, const Rational& alpha) {
    if (!(r > -1 && r < 0)) throw ROutOfRange("toy model requires r in (-1, 0)");
    Rational diff = alpha - r;
    if (denominator(diff) == 1) return ToyGr{1, Scalar(-alpha)};
    return ToyGr{0, Scalar(0)};
}

NearbyIso nearbyIso_impl(const Matrix& nu, long p) {
    size_t g = nu.rows();
    size_t dim = g * (p + 1);

    // nu^{p+1} must vanish for the truncation to capture the whole ladder
    Matrix power = Matrix::identity(g);
    for (long j = 0; j <= p; ++j) power = power * nu;
    if (!power.is_zero())
        throw TruncationTooShort("truncation level is below the nilpotency index");

    NearbyIso out;
    out.ladder = Matrix::zero(dim, dim);
    // ladder = nu on each level plus the downward shift e_k -> e_{k-1}
    for (long k = 0; k <= p; ++k) {
        for (size_t i = 0; i < g; ++i) {
            for (size_t j = 0; j < g; ++j)
                if (!nu.at(i, j).is_zero()) out.ladder.at(k * g + i, k * g + j) = nu.at(i, j);
            if (k + 1 <= p) out.ladder.at(k * g + i, (k + 1) * g + i) += Scalar(1);
        }
    }
    // m -> sum_k (-nu)^k m (x) e_k
    out.into_kernel = Matrix::zero(dim, g);
    Matrix pw = Matrix::identity(g);
    for (long k = 0; k <= p; ++k) {
        for (size_t i = 0; i < g; ++i)
            for (size_t j = 0; j < g; ++j) out.into_kernel.at(k * g + i, j) = pw.at(i, j);
        pw = pw * (-nu);
    }
    // sum m_k (x) e_k -> sum_k (-nu)^k m_{p-k}
    out.from_coker = Matrix::zero(g, dim);
    pw = Matrix::identity(g);
    for (long k = 0; k <= p; ++k) {
        for (size_t i = 0; i < g; ++i)
            for (size_t j = 0; j < g; ++j) out.from_coker.at(i, (p - k) * g + j) = pw.at(i, j);
        pw = pw * (-nu);
    }

    Subspace ker = kernel(out.ladder);
    Subspace img = image(out.into_kernel);
    out.kernel_iso = (out.ladder * out.into_kernel).is_zero() &&
                     out.into_kernel.rank() == g && img == ker;
    Subspace im_ladder = image(out.ladder);
    bool kills_image = (out.from_coker * out.ladder).is_zero();
    out.cokernel_iso = kills_image && out.from_coker.rank() == g &&
                       im_ladder.dim() + g == dim;
    return out;
}

NearbyIso nearby_iso(const Matrix& theta, const Rational& alpha, long p) {
    if (!theta.is_square()) throw dimension_error("nearby_iso: theta not square");
    if (p < 0) throw dimension_error("nearby_iso: negative truncation");
    Matrix nu = theta;
    for (size_t i = 0; i < nu.rows(); ++i) nu.at(i, i) += Scalar(Rational(alpha));
    // nu must be nilpotent (theta has the single eigenvalue -alpha)
    Matrix pw = Matrix::identity(nu.rows());
    for (size_t j = 0; j < nu.rows(); ++j) pw = pw * nu;
    if (!pw.is_zero())
        throw dimension_error("nearby_iso: t d/dt - eigenvalue is not nilpotent on the model");
    return nearbyIso_impl(nu, p);
}

namespace {
CanVar zero_can_var() {
    CanVar cv;
    cv.can = Matrix::zero(0, 0);
    cv.var = Matrix::zero(0, 0);
    cv.var_can = Matrix::zero(0, 0);
    cv.can_var = Matrix::zero(0, 0);
    return cv;
}
} // namespace

CanVar can_var(const ToyVModule& m) {
    // Gr_0 and Gr_{-1} both vanish for r strictly between -1 and 0
    ToyGr g0 = toy_gr(m.r, Rational(0));
    ToyGr gm1 = toy_gr(m.r, Rational(-1));
    CanVar cv = zero_can_var();
    cv.dim_gr_0 = g0.dim;
    cv.dim_gr_minus1 = gm1.dim;
    return cv;
}

CanVar can_var(const LaurentModule& m) {
    // Gr_alpha = Q t^{-alpha}: Gr_{-1} = Q t, Gr_0 = Q 1 whenever the window
    // contains those exponents.
    CanVar cv = zero_can_var();
    bool has1 = m.n_lo <= 1 && 1 <= m.n_hi;
    bool has0 = m.n_lo <= 0 && 0 <= m.n_hi;
    cv.dim_gr_minus1 = has1 ? 1 : 0;
    cv.dim_gr_0 = has0 ? 1 : 0;
    if (has1 && has0) {
        cv.can = Matrix(1, 1);
        cv.can.at(0, 0) = Scalar(-1); // -d/dt (t) = -1
        cv.var = Matrix(1, 1);
        cv.var.at(0, 0) = Scalar(1); // t * 1 = t
        cv.var_can = cv.var * cv.can;
        cv.can_var = cv.can * cv.var;
    }
    return cv;
}

} // namespace hodgecalc
