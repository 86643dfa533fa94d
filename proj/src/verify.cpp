#include "hodgecalc/verify.hpp"

#include "hodgecalc/generators.hpp"

#include <functional>
#include <sstream>

namespace hodgecalc {

namespace {

struct Suite {
    std::vector<Verdict> verdicts;

    void check(const std::string& name, bool pass, const std::string& witness = "") {
        verdicts.push_back(Verdict{name, pass, pass ? "" : witness});
    }

    // fold many instances into one verdict, recording the first failure
    void bulk(const std::string& name, size_t count,
              const std::function<std::string(size_t)>& run) {
        for (size_t i = 0; i < count; ++i) {
            std::string w = run(i);
            if (!w.empty()) {
                check(name, false, "instance " + std::to_string(i) + ": " + w);
                return;
            }
        }
        check(name, true);
    }
};

std::string matrix_witness(const Matrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

std::vector<Verdict> exactalg_suite(uint64_t seed) {
    Suite s;
    Rng rng(seed);
    s.bulk("rank_nullity", 60, [&](size_t) -> std::string {
        size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        Matrix A = rng.matrix(r, c, 3);
        if (kernel(A).dim() + A.rank() != c) return matrix_witness(A);
        return "";
    });
    s.bulk("quotient_kills_submodule", 40, [&](size_t) -> std::string {
        size_t n = 2 + rng.below(4);
        Subspace U = Subspace::span(rng.matrix(1 + rng.below(n), n, 3));
        Subspace V = sum(U, Subspace::span(rng.matrix(1 + rng.below(n), n, 3)));
        QuotientMap q = quotient_map(V, U);
        for (size_t r = 0; r < U.dim(); ++r) {
            auto img = q.projection.apply(U.basis_vector(r));
            for (const auto& x : img)
                if (!x.is_zero()) return matrix_witness(U.basis());
        }
        return "";
    });
    s.bulk("positive_definite_lattice_crosscheck", 25, [&](size_t) -> std::string {
        size_t n = 1 + rng.below(3);
        Matrix B = rng.matrix(n, n, 2);
        Matrix G = B.transpose() * B;
        bool pd;
        try {
            pd = is_positive_definite(G, false);
        } catch (const dimension_error&) {
            return "";
        }
        if (!pd) return "";
        std::vector<long> x(n, -2);
        for (;;) {
            bool nonzero = false;
            for (long v : x) nonzero |= (v != 0);
            if (nonzero) {
                Scalar val;
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j)
                        val += Scalar(x[i]) * G.at(i, j) * Scalar(x[j]);
                if (!(val.as_rational() > 0)) return matrix_witness(G);
            }
            size_t k = 0;
            while (k < n && ++x[k] > 2) x[k++] = -2;
            if (k == n) break;
        }
        return "";
    });
    s.bulk("cyclotomic_multiplicity_and_reconstruction", 15, [&](size_t) -> std::string {
        // block-diagonal companion matrices of small cyclotomic factors
        std::vector<unsigned> orders;
        size_t n = 0;
        while (n < 2 + rng.below(3)) {
            unsigned m = 1 + rng.below(6);
            orders.push_back(m);
            n += cyclotomic_poly(m).degree();
        }
        Matrix T(n, n);
        size_t off = 0;
        for (unsigned m : orders) {
            PolyQ phi = cyclotomic_poly(m);
            size_t d = phi.degree();
            for (size_t i = 1; i < d; ++i) T.at(off + i, off + i - 1) = Scalar(1);
            for (size_t i = 0; i < d; ++i) T.at(off + i, off + d - 1) = Scalar(-phi.coeff(i));
            off += d;
        }
        Matrix P = rng.invertible(n, 1);
        T = P * T * P.inverse();
        auto exps = cyclotomic_exponents(T);
        if (exps.size() != n) return matrix_witness(T);
        return "";
    });
    return s.verdicts;
}

std::vector<Verdict> filtration_suite(uint64_t seed) {
    Suite s;
    Rng rng(seed);
    s.bulk("weight_filtration_axioms", 80, [&](size_t) -> std::string {
        size_t n = 1 + rng.below(6);
        Matrix N = rng.nilpotent(n);
        long w = rng.small_int(2);
        WeightFiltration W = monodromy_weight_filtration(NilpotentOp::make(N), w);
        if (!is_monodromy_weight_filtration(N, W)) return matrix_witness(N);
        return "";
    });
    s.bulk("lefschetz_graded_symmetry", 50, [&](size_t) -> std::string {
        size_t n = 1 + rng.below(6);
        Matrix N = rng.nilpotent(n);
        WeightFiltration W = monodromy_weight_filtration(NilpotentOp::make(N), 0);
        std::map<long, size_t> d;
        for (auto [k, v] : W.graded_dims()) d[k] = v;
        for (auto [k, v] : d)
            if (d.count(-k) == 0 || d[-k] != v) return matrix_witness(N);
        return "";
    });
    s.bulk("primitive_lefschetz_decomposition", 30, [&](size_t) -> std::string {
        size_t n = 1 + rng.below(5);
        Matrix N = rng.nilpotent(n);
        NilpotentOp op = NilpotentOp::make(N);
        WeightFiltration W = monodromy_weight_filtration(op, 0);
        auto P = primitive_parts(op, W);
        std::map<long, size_t> pdim;
        for (const auto& p : P) pdim[p.level] = p.in_graded.dim();
        for (auto [l, d] : W.graded_dims()) {
            size_t total = 0;
            for (long r = std::max<long>(0, -l); l + 2 * r <= 2 * static_cast<long>(n); ++r)
                if (pdim.count(l + 2 * r)) total += pdim[l + 2 * r];
            if (total != d) return matrix_witness(N);
        }
        return "";
    });
    s.bulk("relative_filtration_postverified", 25, [&](size_t) -> std::string {
        size_t a = 1 + rng.below(2), b = 1 + rng.below(2);
        size_t n = a + b;
        Matrix N(n, n);
        Matrix Na = rng.nilpotent(a), Nb = rng.nilpotent(b);
        for (size_t i = 0; i < a; ++i)
            for (size_t j = 0; j < a; ++j) N.at(i, j) = Na.at(i, j);
        for (size_t i = 0; i < b; ++i)
            for (size_t j = 0; j < b; ++j) N.at(a + i, a + j) = Nb.at(i, j);
        std::vector<std::vector<Scalar>> lower;
        for (size_t i = 0; i < a; ++i) {
            std::vector<Scalar> v(n);
            v[i] = Scalar(1);
            lower.push_back(v);
        }
        FlagFiltration W = FlagFiltration::from_steps(
            n, true,
            {{Rational(0), Subspace::span(n, lower)}, {Rational(1), Subspace::full(n)}});
        auto M = relative_monodromy_filtration(NilpotentOp::make(N), W);
        if (!M) return ""; // honest non-existence
        for (long k = -4; k <= 5; ++k)
            if (!M->filtration.at(Rational(k - 2))
                     .contains(apply(N, M->filtration.at(Rational(k)))))
                return matrix_witness(N);
        return "";
    });
    return s.verdicts;
}

std::vector<Verdict> mhs_suite(uint64_t seed) {
    Suite s;
    Rng rng(seed);
    std::vector<BPSingularity> cases{BPSingularity::make({3, 4}), BPSingularity::make({2, 3}),
                                     BPSingularity::make({2, 2}),
                                     BPSingularity::make({2, 3, 7})};
    s.bulk("split_identity_F_cap_W", cases.size(), [&](size_t i) -> std::string {
        MHSPackage pkg = to_mhs(cases[i]);
        const SplitMHS& H = pkg.structure;
        FlagFiltration W = H.weight_filtration();
        FlagFiltration F = H.hodge_filtration();
        for (long p = -1; p <= 3; ++p)
            for (long k = -1; k <= 4; ++k) {
                Subspace expected = Subspace::zero(H.dim());
                for (const auto& [pq, sub] : H.pieces())
                    if (pq.first >= p && pq.first + pq.second <= k)
                        expected = sum(expected, sub);
                if (intersect(F.at(Rational(p)), W.at(Rational(k))) != expected)
                    return "exponents case " + std::to_string(i);
            }
        return "";
    });
    s.bulk("first_relation_base_change_invariance", 20, [&](size_t) -> std::string {
        MHSPackage pkg = to_mhs(BPSingularity::make({2, 3}));
        Matrix P = rng.invertible(2, 2);
        Matrix Pi = P.inverse();
        std::map<std::pair<long, long>, Subspace> pieces;
        for (const auto& [pq, sub] : pkg.structure.pieces())
            pieces[pq] = Subspace::span(sub.basis() * P.transpose());
        Matrix conj2 = P * pkg.structure.conj_matrix() * Pi.conj();
        SplitMHS H2 = SplitMHS::make(2, pieces, conj2);
        Matrix S2 = Pi.transpose() * pkg.pairing * Pi;
        if (!check_first_bilinear_relation(H2, Polarization::make(1, S2)).holds)
            return matrix_witness(P);
        return "";
    });
    s.bulk("positivity_scaling_invariance", cases.size(), [&](size_t i) -> std::string {
        MHSPackage pkg = to_mhs(cases[i]);
        size_t d = pkg.structure.dim();
        NilpotentOp z = NilpotentOp::make(Matrix::zero(d, d));
        for (long c : {2, -3}) {
            Polarization S{pkg.weights[0], pkg.pairing * Scalar(c)};
            if (!check_positivity(pkg.structure, S, z).definite)
                return "scale " + std::to_string(c);
        }
        return "";
    });
    return s.verdicts;
}

std::vector<Verdict> quiver_suite(uint64_t seed) {
    Suite s;
    Rng rng(seed);
    s.bulk("roundtrip_natural_isomorphism", 200, [&](size_t) -> std::string {
        for (;;) {
            size_t d0 = rng.below(5), d1 = rng.below(5);
            Matrix u = rng.matrix(d0, d1, 2);
            Matrix v = rng.matrix(d1, d0, 2);
            if (!check_invertibility(u, v)) continue;
            if (!beilinson_roundtrip(u, v).natural_iso)
                return matrix_witness(u) + " / " + matrix_witness(v);
            return "";
        }
    });
    s.bulk("monodromy_recovered_by_extensions", 40, [&](size_t) -> std::string {
        size_t n = 1 + rng.below(4);
        Matrix T = rng.unipotent(n);
        if (monodromy(extend_shriek(T)) != T) return matrix_witness(T);
        if (monodromy(extend_star(T)) != T) return matrix_witness(T);
        return "";
    });
    s.bulk("minimal_extension_minimality", 40, [&](size_t) -> std::string {
        size_t n = 1 + rng.below(4);
        Matrix T = rng.unipotent(n);
        auto rep = minimality_report(intermediate_extension(T));
        if (!rep.minimal) return matrix_witness(T);
        return "";
    });
    s.bulk("double_dual_identity", 100, [&](size_t) -> std::string {
        size_t p = rng.below(4), f = rng.below(4);
        DiskQuiver q = DiskQuiver::make(p, f, rng.matrix(f, p, 3), rng.matrix(p, f, 3));
        DiskQuiver dd = dual(dual(q));
        if (dd.c != q.c || dd.v != q.v) return matrix_witness(q.c);
        return "";
    });
    s.bulk("comparison_kernel_stabilizes", 15, [&](size_t) -> std::string {
        size_t d = 1 + rng.below(4);
        Matrix T = rng.unipotent(d);
        Matrix N = T - Matrix::identity(d);
        size_t idx = 1;
        Matrix pw = N;
        while (!pw.is_zero()) {
            pw = pw * N;
            ++idx;
        }
        for (size_t n = idx; n <= idx + 1; ++n) {
            auto cmp = shriek_star_comparison(T, n);
            if (cmp.kernel_dim != d) return matrix_witness(T);
        }
        return "";
    });
    return s.verdicts;
}

std::vector<Verdict> logext_suite(uint64_t seed) {
    Suite s;
    Rng rng(seed);
    {
        bool ok = true;
        for (long a = -3; a < 3 && ok; ++a)
            for (long b = a + 1; b <= 3 && ok; ++b)
                if (!jab_gram(a, b, -b, -a).is_invertible()) ok = false;
        s.check("log_block_pairing_perfect", ok);
    }
    s.bulk("descended_symmetry", 100, [&](size_t) -> std::string {
        for (;;) {
            size_t d = 1 + rng.below(3);
            Matrix nu = rng.nilpotent(d);
            Matrix sys(d * d, d * d);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    for (size_t a = 0; a < d; ++a)
                        for (size_t b = 0; b < d; ++b) {
                            Scalar coef;
                            if (i == a) coef += nu.at(b, j);
                            if (j == b) coef -= nu.at(a, i);
                            if (!coef.is_zero()) sys.at(i * d + j, a * d + b) = coef;
                        }
            Subspace sols = kernel(sys);
            if (sols.is_zero()) continue;
            std::vector<Scalar> combo(d * d);
            for (size_t r = 0; r < sols.dim(); ++r) {
                Scalar c(rng.small_int(2));
                auto v = sols.basis_vector(r);
                for (size_t k = 0; k < d * d; ++k) combo[k] += c * v[k];
            }
            Matrix K(d, d);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) K.at(i, j) = combo[i * d + j];
            if (K.is_zero()) continue;
            long p = 1 + rng.below(2);
            ElementarySection x = ElementarySection::zero(Rational(-1, 3), p, d);
            ElementarySection y = ElementarySection::zero(Rational(-1, 3), p, d);
            for (long k = 0; k <= p; ++k)
                for (size_t i = 0; i < d; ++i) {
                    x.levels[k][i] = Scalar(rng.small_int(2));
                    y.levels[k][i] = Scalar(rng.small_int(2));
                }
            Scalar lhs = extend_pairing(K, apply_log_monodromy(nu, x), y).residue;
            Scalar rhs = extend_pairing(K, x, apply_log_monodromy(nu, y)).residue;
            if (lhs != rhs) return matrix_witness(K);
            return "";
        }
    });
    s.bulk("nondegeneracy_descent", 30, [&](size_t) -> std::string {
        size_t d = 1 + rng.below(4);
        long p = rng.below(3);
        Matrix K = rng.matrix(d, d, 3);
        if (descended_gram(K, p).is_invertible() != K.is_invertible())
            return matrix_witness(K);
        return "";
    });
    {
        bool ok = true;
        Rational r(-2, 5);
        for (long n = -5; n <= 5 && ok; ++n) {
            if (toy_gr(r, r + n).dim != 1) ok = false;
            if (toy_gr(r, r + n + Rational(1, 9)).dim != 0) ok = false;
        }
        s.check("toy_jump_set_is_r_plus_Z", ok);
    }
    return s.verdicts;
}

std::vector<Verdict> saito_suite(uint64_t seed) {
    Suite s;
    Rng rng(seed);
    s.bulk("single_index_reduces_to_identity", 10, [&](size_t i) -> std::string {
        PolarizedInput in = random_polarized_input(rng, 1 + rng.below(3), 1, 0, i % 2 == 0);
        ExtendedStructure ext = extend(in, {0});
        if (ext.S_tilde != in.S) return "pairing changed";
        if (!weight_check(ext, in).passed) return "weight check failed";
        return "";
    });
    s.bulk("nondegenerate_and_weight_checked", 100, [&](size_t i) -> std::string {
        size_t ops = 1 + rng.below(3);
        PolarizedInput in =
            random_polarized_input(rng, 1 + rng.below(4), ops, rng.small_int(2), i % 2 == 0);
        std::vector<size_t> I(ops);
        for (size_t k = 0; k < ops; ++k) I[k] = k;
        ExtendedStructure ext = extend(in, I);
        if (!ext.S_tilde.is_invertible()) return "degenerate extension";
        if (!weight_check(ext, in).passed) return "weight check failed";
        return "";
    });
    s.bulk("tensor_congruence_small_dims", 20, [&](size_t i) -> std::string {
        size_t ops = 2 + rng.below(2);
        PolarizedInput in = random_polarized_input(rng, 1 + rng.below(3), ops, 0, i % 2 == 0);
        std::vector<size_t> I(ops);
        for (size_t k = 0; k < ops; ++k) I[k] = k;
        ExtendedStructure ext = extend(in, I);
        if (!tensor_congruence(ext, in)) return "no congruence found";
        return "";
    });
    {
        bool ok = true;
        for (size_t l = 2; l <= 5 && ok; ++l) {
            Matrix can = jordan_can(l);
            Matrix var = jordan_var(l);
            if (can.transpose() * jordan_ring(l - 1).pairing != jordan_ring(l).pairing * var)
                ok = false;
        }
        s.check("can_var_compatibility", ok);
    }
    return s.verdicts;
}

std::vector<Verdict> singularity_suite(uint64_t seed) {
    Suite s;
    (void)seed;
    std::vector<BPSingularity> small{
        BPSingularity::make({3, 4}), BPSingularity::make({2, 3}),
        BPSingularity::make({2, 2, 2}), BPSingularity::make({2, 3, 7}),
        BPSingularity::make({2, 2}), BPSingularity::make({4, 4}),
        BPSingularity::make({5, 5}), BPSingularity::make({2, 2, 2, 3}),
        BPSingularity::make({3, 3, 3}), BPSingularity::make({6, 7})};
    s.bulk("spectrum_symmetry", small.size(), [&](size_t i) -> std::string {
        auto sp = spectrum(small[i]);
        if (sp.size() > 200) return "";
        Rational total(small[i].n() + 1);
        for (size_t k = 0; k < sp.size(); ++k)
            if (sp[k].l + sp[sp.size() - 1 - k].l != total) return "case " + std::to_string(i);
        return "";
    });
    s.bulk("hodge_number_symmetry", small.size(), [&](size_t i) -> std::string {
        OmegaF om = bigrading(small[i]);
        std::map<std::pair<long, long>, size_t> h;
        for (const auto& t : om.types) h[t]++;
        for (auto [pq, cnt] : h)
            if (h[{pq.second, pq.first}] != cnt) return "case " + std::to_string(i);
        return "";
    });
    s.bulk("residue_gram_is_permutation", small.size(), [&](size_t i) -> std::string {
        OmegaF om = bigrading(small[i]);
        for (size_t r = 0; r < om.mu; ++r) {
            size_t nonzero = 0;
            for (size_t c = 0; c < om.mu; ++c)
                if (!om.residue.at(r, c).is_zero()) ++nonzero;
            if (nonzero != 1) return "case " + std::to_string(i);
        }
        return "";
    });
    s.bulk("good_basis_antidiagonal", small.size(), [&](size_t i) -> std::string {
        if (!good_basis_check(small[i]).ok) return "case " + std::to_string(i);
        return "";
    });
    s.bulk("riemann_hodge", small.size(), [&](size_t i) -> std::string {
        if (!riemann_hodge_check(small[i]).ok) return "case " + std::to_string(i);
        return "";
    });
    return s.verdicts;
}

std::vector<Verdict> neron_suite(uint64_t seed) {
    Suite s;
    Rng rng(seed);

    Matrix Q(4, 4);
    Q.at(0, 2) = Scalar(1);
    Q.at(1, 3) = Scalar(1);
    Q.at(2, 0) = Scalar(1);
    Q.at(3, 1) = Scalar(1);
    Matrix N(4, 4);
    N.at(0, 2) = Scalar(1);
    N.at(1, 3) = Scalar(1);
    NilpotentOrbit orbit = NilpotentOrbit::make(4, Q, {N, N}, {}, Scalar::i());
    auto entry = [](long e1, long e2, Scalar c) {
        return LaurentEntry{{e1, e2}, std::move(c)};
    };
    std::vector<std::vector<LaurentEntry>> gens;
    gens.push_back({entry(0, 0, Scalar(0)), entry(0, 0, Scalar(0)), entry(0, 0, Scalar(1)),
                    entry(0, 0, Scalar::i())});
    gens.push_back({entry(-1, 0, Scalar(1)), entry(-1, 0, Scalar::i()), entry(0, 0, Scalar(0)),
                    entry(0, 0, Scalar(0))});
    gens.push_back({entry(0, -1, Scalar(1)), entry(0, -1, Scalar::i()), entry(0, 0, Scalar(0)),
                    entry(0, 0, Scalar(0))});
    SectionFamily frame = SectionFamily::make(2, 4, gens);

    {
        Presentation pres = presentation(frame);
        bool ok = pres.relations.size() == 1 && !pres.degree_bound_reached;
        s.check("boundary_presentation_single_relation", ok);
        s.check("fiber_dims_3_2_2",
                fiber_dim(frame, pres, {Scalar(0), Scalar(0)}) == 3 &&
                    fiber_dim(frame, pres, {Scalar(0), Scalar(1)}) == 2 &&
                    fiber_dim(frame, pres, {Scalar(1), Scalar(1)}) == 2);
    }
    s.bulk("closure_additive_in_lattice", 10, [&](size_t) -> std::string {
        std::vector<Scalar> h1(4), h2(4), hs(4);
        for (size_t i = 0; i < 4; ++i) {
            h1[i] = Scalar(rng.small_int(3));
            h2[i] = Scalar(rng.small_int(3));
            hs[i] = h1[i] + h2[i];
        }
        auto p1 = integral_closure_at(orbit, frame, h1);
        auto p2 = integral_closure_at(orbit, frame, h2);
        auto ps = integral_closure_at(orbit, frame, hs);
        for (size_t gi = 0; gi < 3; ++gi) {
            std::map<std::pair<std::vector<unsigned>, std::vector<long>>, Scalar> sums;
            for (const auto& t : p1[gi].terms) sums[{t.z_expo, t.s_expo}] += t.h_linear[0];
            for (const auto& t : p2[gi].terms) sums[{t.z_expo, t.s_expo}] += t.h_linear[0];
            for (const auto& t : ps[gi].terms) {
                if (sums[{t.z_expo, t.s_expo}] != t.h_linear[0]) return "mismatch";
                sums.erase({t.z_expo, t.s_expo});
            }
            for (const auto& [k, v] : sums)
                if (!v.is_zero()) return "dropped term";
        }
        return "";
    });
    {
        auto cls = fiber_classification(orbit, frame);
        bool ok = cls.ok && cls.strata.size() == 4;
        for (const auto& rep : cls.strata) {
            size_t vanishing = 0;
            for (bool b : rep.vanishing) vanishing += b;
            if (vanishing == 2 && (rep.torus_rank != 1 || rep.vector_dim != 2)) ok = false;
            if (vanishing == 1 && (rep.torus_rank != 1 || rep.vector_dim != 1)) ok = false;
        }
        s.check("stratum_table", ok);
    }
    {
        Matrix T{{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(1)}};
        auto fr = deligne_residue_frame(T);
        s.check("deligne_residues_sixth_roots",
                fr.residues.count(Rational(1, 6)) == 1 && fr.residues.count(Rational(5, 6)) == 1);
    }
    return s.verdicts;
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"exactalg", "filtration", "mhs",     "quiver",
                                                "logext",   "saito",      "singularity",
                                                "neron"};
    return names;
}

std::vector<Verdict> verify_suite(const std::string& name, uint64_t seed) {
    if (name == "exactalg") return exactalg_suite(seed);
    if (name == "filtration") return filtration_suite(seed);
    if (name == "mhs") return mhs_suite(seed);
    if (name == "quiver") return quiver_suite(seed);
    if (name == "logext") return logext_suite(seed);
    if (name == "saito") return saito_suite(seed);
    if (name == "singularity") return singularity_suite(seed);
    if (name == "neron") return neron_suite(seed);
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace hodgecalc
