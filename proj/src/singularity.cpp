#include "hodgecalc/singularity.hpp"

#include <algorithm>

namespace hodgecalc {

BPSingularity BPSingularity::make(std::vector<unsigned> exponents) {
    if (exponents.empty()) throw dimension_error("singularity: no variables");
    for (unsigned a : exponents)
        if (a < 2) throw dimension_error("singularity: exponents must be at least 2");
    return BPSingularity{std::move(exponents)};
}

size_t milnor_number(const BPSingularity& f) {
    size_t mu = 1;
    for (unsigned a : f.exponents) mu *= (a - 1);
    return mu;
}

std::vector<SpectrumEntry> spectrum(const BPSingularity& f) {
    std::vector<SpectrumEntry> out;
    std::vector<unsigned> k(f.num_vars(), 0);
    for (;;) {
        SpectrumEntry e;
        e.monomial = k;
        Rational l(0);
        for (size_t i = 0; i < k.size(); ++i) l += Rational(k[i] + 1, f.exponents[i]);
        e.l = l;
        e.alpha = l - 1;
        out.push_back(std::move(e));
        size_t i = 0;
        while (i < k.size() && ++k[i] > f.exponents[i] - 2) k[i++] = 0;
        if (i == k.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.l != b.l) return a.l < b.l;
        return a.monomial < b.monomial;
    });
    return out;
}

OmegaF bigrading(const BPSingularity& f) {
    OmegaF om;
    om.f = f;
    om.basis = spectrum(f);
    om.mu = om.basis.size();
    long n = f.n();
    for (const auto& e : om.basis) {
        if (denominator(e.l) == 1) {
            long l = static_cast<long>(numerator(e.l));
            om.types.emplace_back(l, n + 1 - l);
        } else {
            // p = ceil(l) - 1
            Integer num = numerator(e.l), den = denominator(e.l);
            Integer q = num / den; // floor for positive l
            long p = static_cast<long>(q); // ceil(l) - 1 = floor(l) for non-integer l
            om.types.emplace_back(p, n - p);
        }
    }
    // conjugation: complementary monomial
    om.conj_perm.resize(om.mu);
    for (size_t i = 0; i < om.mu; ++i) {
        std::vector<unsigned> comp(f.num_vars());
        for (size_t v = 0; v < f.num_vars(); ++v)
            comp[v] = f.exponents[v] - 2 - om.basis[i].monomial[v];
        auto it = std::find_if(om.basis.begin(), om.basis.end(),
                               [&](const SpectrumEntry& e) { return e.monomial == comp; });
        om.conj_perm[i] = static_cast<size_t>(it - om.basis.begin());
    }
    // residue: complementary exponents pair to 1
    om.residue = Matrix::zero(om.mu, om.mu);
    for (size_t i = 0; i < om.mu; ++i) om.residue.at(i, om.conj_perm[i]) = Scalar(1);
    om.modified = om.residue;
    for (size_t i = 0; i < om.mu; ++i)
        for (size_t j = 0; j < om.mu; ++j)
            if (!om.modified.at(i, j).is_zero() && om.types[j].first % 2 != 0)
                om.modified.at(i, j) = -om.modified.at(i, j);
    return om;
}

Matrix residue_pairing(const BPSingularity& f) { return bigrading(f).residue; }
Matrix modified_residue(const BPSingularity& f) { return bigrading(f).modified; }

GoodBasisReport good_basis_check(const BPSingularity& f) {
    OmegaF om = bigrading(f);
    GoodBasisReport rep;
    rep.antidiagonal = true;
    rep.entries_unimodular = true;
    rep.kappa.resize(om.mu);
    for (size_t i = 0; i < om.mu; ++i) {
        for (size_t j = 0; j < om.mu; ++j) {
            bool anti = (j == om.mu - 1 - i);
            bool nonzero = !om.residue.at(i, j).is_zero();
            if (nonzero != anti) rep.antidiagonal = false;
            if (nonzero && om.residue.at(i, j) != Scalar(1) &&
                om.residue.at(i, j) != Scalar(-1))
                rep.entries_unimodular = false;
        }
        rep.kappa[i] = om.conj_perm[i] + 1; // 1-indexed
    }
    rep.involution_ok = true;
    long n = f.n();
    Rational middle(n - 1, 2);
    for (size_t i = 0; i < om.mu; ++i) {
        size_t k = rep.kappa[i];
        if (om.basis[i].alpha != middle) {
            if (k != om.mu - i) rep.involution_ok = false; // mu + 1 - (i+1), 1-indexed
        } else {
            if (k != om.mu - i && k != i + 1) rep.involution_ok = false;
        }
    }
    rep.ok = rep.antidiagonal && rep.entries_unimodular && rep.involution_ok;
    return rep;
}

FlagFiltration spectral_filtration(const OmegaF& om) {
    // decreasing by the spectral degree used for the bigrading's first index
    std::set<long> ps;
    for (const auto& t : om.types) ps.insert(t.first);
    std::vector<std::pair<Rational, Subspace>> steps;
    for (long p : ps) {
        std::vector<std::vector<Scalar>> vecs;
        for (size_t i = 0; i < om.mu; ++i)
            if (om.types[i].first >= p) {
                std::vector<Scalar> e(om.mu);
                e[i] = Scalar(1);
                vecs.push_back(std::move(e));
            }
        steps.emplace_back(Rational(p), Subspace::span(om.mu, vecs));
    }
    return FlagFiltration::from_steps(om.mu, false, std::move(steps));
}

FlagFiltration hodge_filtration_of(const OmegaF& om) { return spectral_filtration(om); }

bool filtrations_opposite(const FlagFiltration& F, const FlagFiltration& U) {
    if (F.ambient_dim() != U.ambient_dim() || F.increasing() || U.increasing())
        throw dimension_error("filtrations_opposite: need two decreasing flags");
    long lo = 0, hi = 0;
    auto widen = [&](const FlagFiltration& f) {
        for (const auto& [idx, s] : f.steps()) {
            long i = static_cast<long>(numerator(idx));
            lo = std::min(lo, i - 1);
            hi = std::max(hi, i + 1);
        }
    };
    widen(F);
    widen(U);
    for (long p = lo; p <= hi; ++p)
        for (long q = lo; q <= hi; ++q) {
            if (p == q) continue;
            // Gr_F^p Gr_U^q = F^p cap U^q / (F^{p+1} cap U^q + F^p cap U^{q+1})
            Subspace top = intersect(F.at(Rational(p)), U.at(Rational(q)));
            Subspace bot = sum(intersect(F.at(Rational(p + 1)), U.at(Rational(q))),
                               intersect(F.at(Rational(p)), U.at(Rational(q + 1))));
            if (top.dim() > intersect(top, bot).dim()) return false;
        }
    return true;
}

bool opposite_filtration_check(const BPSingularity& f) {
    OmegaF om = bigrading(f);
    return filtrations_opposite(hodge_filtration_of(om), spectral_filtration(om));
}

MHSPackage to_mhs(const BPSingularity& f) {
    OmegaF om = bigrading(f);
    std::map<std::pair<long, long>, std::vector<std::vector<Scalar>>> vecs;
    for (size_t i = 0; i < om.mu; ++i) {
        std::vector<Scalar> e(om.mu);
        e[i] = Scalar(1);
        vecs[om.types[i]].push_back(std::move(e));
    }
    std::map<std::pair<long, long>, Subspace> pieces;
    for (auto& [pq, vv] : vecs) pieces[pq] = Subspace::span(om.mu, vv);
    Matrix conj = Matrix::zero(om.mu, om.mu);
    for (size_t i = 0; i < om.mu; ++i) conj.at(om.conj_perm[i], i) = Scalar(1);

    MHSPackage pkg;
    pkg.structure = SplitMHS::make(om.mu, std::move(pieces), conj);
    pkg.pairing = om.modified;
    pkg.weights = pkg.structure.weight_levels();
    for (long w : pkg.weights) pkg.graded[w] = om.modified;
    return pkg;
}

RiemannHodgeReport riemann_hodge_check(const BPSingularity& f) {
    MHSPackage pkg = to_mhs(f);
    RiemannHodgeReport rep;
    rep.first_relation = true;
    rep.orthogonal = true;
    rep.definite = true;
    size_t mu = pkg.structure.dim();
    for (long w : pkg.weights) {
        // restrict to the pure weight-w part and run both checks with N = 0
        Subspace level = pkg.structure.level_subspace(w);
        std::map<std::pair<long, long>, Subspace> level_pieces;
        size_t d = level.dim();
        for (const auto& [pq, s] : pkg.structure.pieces()) {
            if (pq.first + pq.second != w || s.dim() == 0) continue;
            std::vector<std::vector<Scalar>> rows;
            for (size_t r = 0; r < s.dim(); ++r)
                rows.push_back(level.coordinates(s.basis_vector(r)));
            level_pieces[pq] = Subspace::span(d, rows);
        }
        Matrix conj_level(d, d);
        for (size_t r = 0; r < d; ++r) {
            auto coords = level.coordinates(pkg.structure.conjugate(level.basis_vector(r)));
            for (size_t i = 0; i < d; ++i) conj_level.at(i, r) = coords[i];
        }
        Matrix Slevel(d, d);
        for (size_t a = 0; a < d; ++a)
            for (size_t b = 0; b < d; ++b) {
                Scalar acc;
                auto va = level.basis_vector(a), vb = level.basis_vector(b);
                for (size_t i = 0; i < mu; ++i)
                    for (size_t j = 0; j < mu; ++j)
                        if (!pkg.pairing.at(i, j).is_zero())
                            acc += va[i] * pkg.pairing.at(i, j) * vb[j];
                Slevel.at(a, b) = acc;
            }
        SplitMHS pure = SplitMHS::make(d, level_pieces, conj_level);
        Polarization pol = Polarization::make(w, Slevel);
        auto rel = check_first_bilinear_relation(pure, pol);
        if (!rel.holds) rep.first_relation = false;
        auto pos = check_positivity(pure, pol, NilpotentOp::make(Matrix::zero(d, d)));
        if (!pos.orthogonal) rep.orthogonal = false;
        if (!pos.definite) rep.definite = false;
        for (const auto& b : pos.blocks) rep.blocks.push_back(b);
    }
    rep.ok = rep.first_relation && rep.orthogonal && rep.definite;
    return rep;
}

} // namespace hodgecalc
