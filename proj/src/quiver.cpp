#include "hodgecalc/quiver.hpp"

#include "hodgecalc/cyclotomic.hpp"

namespace hodgecalc {

DiskQuiver DiskQuiver::make(size_t psi_dim, size_t phi_dim, Matrix c, Matrix v) {
    if (c.rows() != phi_dim || c.cols() != psi_dim)
        throw dimension_error("quiver: c has the wrong shape");
    if (v.rows() != psi_dim || v.cols() != phi_dim)
        throw dimension_error("quiver: v has the wrong shape");
    return DiskQuiver{psi_dim, phi_dim, std::move(c), std::move(v)};
}

Matrix monodromy(const DiskQuiver& q) { return Matrix::identity(q.psi_dim) + q.v * q.c; }

bool check_invertibility(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.cols() || u.cols() != v.rows())
        throw dimension_error("check_invertibility: shape mismatch");
    Matrix a = Matrix::identity(u.rows()) - u * v;
    Matrix b = Matrix::identity(v.rows()) - v * u;
    return a.is_invertible() && b.is_invertible();
}

namespace {

// polynomial arithmetic over Q(i), little-endian coefficients
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(out);
}

Poly poly_sub(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return poly_trim(a);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& d) {
    Poly rem = a, quo;
    if (a.size() >= d.size()) quo.assign(a.size() - d.size() + 1, Scalar(0));
    while (rem.size() >= d.size() && !rem.empty()) {
        Scalar f = rem.back() / d.back();
        size_t shift = rem.size() - d.size();
        quo[shift] = f;
        for (size_t i = 0; i < d.size(); ++i) rem[shift + i] -= f * d[i];
        rem = poly_trim(rem);
    }
    return {poly_trim(quo), rem};
}

// a s + b t = gcd(s, t) = 1 for coprime s, t
std::pair<Poly, Poly> poly_bezout(const Poly& s, const Poly& t) {
    Poly r0 = s, r1 = t;
    Poly a0{Scalar(1)}, a1{};
    Poly b0{}, b1{Scalar(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly a2 = poly_sub(a0, poly_mul(q, a1));
        Poly b2 = poly_sub(b0, poly_mul(q, b1));
        r0 = r1;
        r1 = r;
        a0 = a1;
        a1 = a2;
        b0 = b1;
        b1 = b2;
    }
    // r0 = gcd, a0 s + b0 t = r0; normalize to 1
    if (r0.size() != 1) throw std::logic_error("poly_bezout: inputs not coprime");
    Scalar inv = Scalar(1) / r0[0];
    for (auto& x : a0) x *= inv;
    for (auto& x : b0) x *= inv;
    return {a0, b0};
}

Matrix poly_eval(const Poly& p, const Matrix& A) {
    Matrix out = Matrix::zero(A.rows(), A.cols());
    Matrix pw = Matrix::identity(A.rows());
    for (size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) out = out + pw * p[k];
        pw = pw * A;
    }
    return out;
}

} // namespace

Matrix nilpotent_part_projection(const Matrix& A) {
    if (!A.is_square()) throw dimension_error("nilpotent_part_projection: not square");
    size_t n = A.rows();
    auto cp = A.charpoly();
    size_t k = 0;
    while (k < cp.size() && cp[k].is_zero()) ++k;
    if (k == 0) return Matrix::zero(n, n); // A invertible, no nilpotent part
    if (k == cp.size() - 1 && cp.back() == Scalar(1) && k == n) return Matrix::identity(n);
    Poly tk(k + 1, Scalar(0));
    tk[k] = Scalar(1);
    Poly g(cp.begin() + k, cp.end());
    auto [a, b] = poly_bezout(tk, g);
    // b g = 1 on the nilpotent part, 0 on the rest
    return poly_eval(poly_mul(b, g), A);
}

BeilinsonImage beilinson_functor(const Matrix& u, const Matrix& v) {
    if (!check_invertibility(u, v))
        throw InvertibilityFailed("1 - uv or 1 - vu is singular");
    size_t d0 = u.rows(), d1 = v.rows();
    Matrix uv = u * v, vu = v * u;
    Subspace n0 = kernel(uv.pow(d0));
    Subspace n1 = kernel(vu.pow(d1));
    BeilinsonImage img;
    img.v0_nilpotent = n0;
    img.v1_nilpotent = n1;
    img.phi = Matrix::identity(d1) - vu;
    img.u_restricted = induced_map(u, n1, n0);
    img.v_restricted = induced_map(v, n0, n1);
    return img;
}

BeilinsonRoundTrip beilinson_roundtrip(const Matrix& u, const Matrix& v) {
    BeilinsonImage img = beilinson_functor(u, v);
    size_t d0 = u.rows(), d1 = v.rows();
    Matrix uv = u * v, vu = v * u;
    Matrix P = nilpotent_part_projection(uv); // onto v0_nilpotent
    Matrix Q = nilpotent_part_projection(vu);
    Matrix Qc = Matrix::identity(d1) - Q;
    Subspace nn1 = image(Qc); // invertible part of (V1, vu)

    // reconstructed V0: v0_nilpotent (+) invertible part of V1
    size_t a = img.v0_nilpotent.dim(), b = nn1.dim();
    // u_rec : V1 -> V0_rec,  y |-> (u_restr(Q y), vu (Qc y))
    Matrix u_rec(a + b, d1);
    Matrix v_rec(d1, a + b);
    for (size_t j = 0; j < d1; ++j) {
        std::vector<Scalar> col(d1);
        for (size_t i = 0; i < d1; ++i) col[i] = Q.at(i, j);
        auto top = img.v0_nilpotent.coordinates(u.apply(col));
        std::vector<Scalar> colc(d1);
        for (size_t i = 0; i < d1; ++i) colc[i] = Qc.at(i, j);
        auto bot = nn1.coordinates(vu.apply(colc));
        for (size_t i = 0; i < a; ++i) u_rec.at(i, j) = top[i];
        for (size_t i = 0; i < b; ++i) u_rec.at(a + i, j) = bot[i];
    }
    // v_rec : V0_rec -> V1 is v on the nilpotent summand, inclusion on the other
    for (size_t j = 0; j < a; ++j) {
        auto img1 = v.apply(img.v0_nilpotent.basis_vector(j));
        for (size_t i = 0; i < d1; ++i) v_rec.at(i, j) = img1[i];
    }
    for (size_t j = 0; j < b; ++j) {
        auto w = nn1.basis_vector(j);
        for (size_t i = 0; i < d1; ++i) v_rec.at(i, a + j) = w[i];
    }

    // comparison: f0 = (P x, v((1-P) x)), f1 = id
    BeilinsonRoundTrip rt;
    rt.f1 = Matrix::identity(d1);
    rt.f0 = Matrix(a + b, d0);
    for (size_t j = 0; j < d0; ++j) {
        std::vector<Scalar> ej(d0);
        ej[j] = Scalar(1);
        auto px = P.apply(ej);
        auto top = img.v0_nilpotent.coordinates(px);
        std::vector<Scalar> rest(d0);
        for (size_t i = 0; i < d0; ++i) rest[i] = ej[i] - px[i];
        auto bot = nn1.coordinates(v.apply(rest));
        for (size_t i = 0; i < a; ++i) rt.f0.at(i, j) = top[i];
        for (size_t i = 0; i < b; ++i) rt.f0.at(a + i, j) = bot[i];
    }
    rt.natural_iso = rt.f0.is_invertible() && (rt.f0 * u == u_rec * rt.f1) &&
                     (rt.f1 * v == v_rec * rt.f0);
    return rt;
}

namespace {

void require_rational(const Matrix& T, const char* who) {
    for (size_t i = 0; i < T.rows(); ++i)
        for (size_t j = 0; j < T.cols(); ++j)
            if (!T.at(i, j).is_real())
                throw dimension_error(std::string(who) + ": monodromy must be rational");
}

// splits T into unipotent / no-eigenvalue-one parts; both projections are
// polynomials in T, so everything stays in the original coordinates
struct MonodromySplit {
    Matrix P1; // projection onto the unipotent part
    Matrix N;  // T - id
};

MonodromySplit split_monodromy(const Matrix& T, unsigned bound) {
    require_rational(T, "extension functor");
    if (!T.is_invertible()) throw NotUnipotent("monodromy is singular");
    cyclotomic_exponents(T, bound); // validates quasi-unipotence
    Matrix N = T - Matrix::identity(T.rows());
    return MonodromySplit{nilpotent_part_projection(N), N};
}

} // namespace

DiskQuiver extend_shriek(const Matrix& T, unsigned bound) {
    auto [P1, N] = split_monodromy(T, bound);
    size_t n = T.rows();
    Matrix P2 = Matrix::identity(n) - P1;
    // c = id on the unipotent part, T - id on the rest; v the other way round
    Matrix c = P1 + N * P2;
    Matrix v = N * P1 + P2;
    return DiskQuiver::make(n, n, c, v);
}

DiskQuiver extend_star(const Matrix& T, unsigned bound) {
    auto [P1, N] = split_monodromy(T, bound);
    size_t n = T.rows();
    (void)P1;
    return DiskQuiver::make(n, n, N, Matrix::identity(n));
}

DiskQuiver intermediate_extension(const Matrix& T, unsigned bound) {
    auto [P1, N] = split_monodromy(T, bound);
    (void)P1;
    size_t n = T.rows();
    Subspace phi = image(N);
    Matrix c = induced_map(N, Subspace::full(n), phi);
    Matrix v = phi.basis().transpose(); // inclusion
    return DiskQuiver::make(n, phi.dim(), c, v);
}

VanishingDecomposition vanishing_decomposition(const DiskQuiver& q) {
    VanishingDecomposition d;
    d.im_c = image(q.c);
    d.ker_v = kernel(q.v);
    d.spans = sum(d.im_c, d.ker_v).is_full();
    d.direct = intersect(d.im_c, d.ker_v).is_zero();
    d.holds = d.spans && d.direct;
    return d;
}

MinimalityReport minimality_report(const DiskQuiver& q) {
    MinimalityReport r;
    r.c_surjective = image(q.c).is_full();
    r.v_injective = kernel(q.v).is_zero();
    r.sub_at_origin = kernel(q.v);
    r.quotient_at_origin_dim = q.phi_dim - image(q.c).dim();
    r.minimal = r.c_surjective && r.v_injective;
    return r;
}

DiskQuiver dual(const DiskQuiver& q) {
    return DiskQuiver::make(q.psi_dim, q.phi_dim, q.v.transpose(), q.c.transpose());
}

bool is_quiver_morphism(const DiskQuiver& q, const DiskQuiver& q2, const Matrix& a,
                        const Matrix& b) {
    return (b * q.c == q2.c * a) && (a * q.v == q2.v * b);
}

ShriekStarComparison shriek_star_comparison(const Matrix& T, size_t n) {
    require_rational(T, "comparison map");
    size_t d = T.rows();
    // V = L (x) J^{0,n}: T_V = T (x) T_J with T_J the size-n unipotent block
    size_t dim = d * n;
    Matrix TJ = Matrix::identity(n);
    for (size_t k = 0; k + 1 < n; ++k) TJ.at(k, k + 1) = Scalar(1);
    Matrix TV(dim, dim);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    TV.at(i * n + k, j * n + l) = T.at(i, j) * TJ.at(k, l);
    Matrix NV = TV - Matrix::identity(dim);
    ShriekStarComparison cmp;
    cmp.tensored_dim = dim;
    cmp.kernel_dim = kernel(NV).dim();
    cmp.cokernel_dim = dim - image(NV).dim();
    cmp.iso = (cmp.kernel_dim == 0 && cmp.cokernel_dim == 0);
    return cmp;
}

} // namespace hodgecalc
