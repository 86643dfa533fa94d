#include "hodgecalc/neron.hpp"

#include <algorithm>
#include <functional>

namespace hodgecalc {

NilpotentOrbit NilpotentOrbit::make(size_t lattice_dim, Matrix Q, std::vector<Matrix> N_list,
                                    std::map<std::pair<long, long>, Subspace> bigrading,
                                    Scalar omega) {
    if (Q.rows() != lattice_dim || Q.cols() != lattice_dim)
        throw dimension_error("orbit: pairing shape mismatch");
    if (omega.im() == 0) throw dimension_error("orbit: omega must have nonzero imaginary part");
    for (const auto& N : N_list) {
        NilpotentOp::make(N); // nilpotency
        if (N.rows() != lattice_dim) throw dimension_error("orbit: nilpotent shape mismatch");
    }
    for (size_t i = 0; i < N_list.size(); ++i)
        for (size_t j = i + 1; j < N_list.size(); ++j)
            if (N_list[i] * N_list[j] != N_list[j] * N_list[i])
                throw NonCommutingNilpotents("orbit operators do not commute");
    for (const auto& [pq, s] : bigrading)
        if (s.ambient_dim() != lattice_dim)
            throw dimension_error("orbit: bigrading ambient mismatch");
    return NilpotentOrbit{lattice_dim, std::move(Q), std::move(N_list), std::move(bigrading),
                          std::move(omega)};
}

OrbitCheck orbit_check(const NilpotentOrbit& orbit) {
    OrbitCheck rep;
    rep.commuting = true;
    rep.nilpotent = true;
    for (size_t i = 0; i < orbit.N_list.size(); ++i) {
        const Matrix& N = orbit.N_list[i];
        Matrix NtQ = N.transpose() * orbit.Q;
        Matrix QN = orbit.Q * N;
        rep.symmetric.push_back(NtQ == QN);
        rep.antisymmetric.push_back((NtQ + QN).is_zero());
        bool shifts = true;
        if (!orbit.bigrading.empty()) {
            for (const auto& [pq, s] : orbit.bigrading) {
                auto it = orbit.bigrading.find({pq.first - 1, pq.second - 1});
                Subspace target = it == orbit.bigrading.end()
                                      ? Subspace::zero(orbit.lattice_dim)
                                      : it->second;
                if (!target.contains(apply(N, s))) shifts = false;
            }
        }
        rep.bigrading_shift.push_back(shifts);
        for (size_t j = i + 1; j < orbit.N_list.size(); ++j)
            if (N * orbit.N_list[j] != orbit.N_list[j] * N) rep.commuting = false;
        Matrix pw = Matrix::identity(orbit.lattice_dim);
        for (size_t k = 0; k < orbit.lattice_dim; ++k) pw = pw * N;
        if (!pw.is_zero()) rep.nilpotent = false;
    }
    return rep;
}

SectionFamily SectionFamily::make(size_t num_coords, size_t rank,
                                  std::vector<std::vector<LaurentEntry>> generators) {
    for (const auto& g : generators) {
        if (g.size() != rank) throw dimension_error("section family: generator length mismatch");
        for (const auto& e : g)
            if (e.expo.size() != num_coords)
                throw dimension_error("section family: exponent length mismatch");
    }
    return SectionFamily{num_coords, rank, std::move(generators)};
}

namespace {

// enumerate monomials of total degree <= bound in k variables
std::vector<std::vector<long>> monomials_up_to(size_t k, size_t bound) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(k, 0);
    std::function<void(size_t, long)> rec = [&](size_t pos, long left) {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (long e = 0; e <= left; ++e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(0, static_cast<long>(bound));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long da = 0, db = 0;
        for (long x : a) da += x;
        for (long x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

long total_degree(const std::vector<long>& e) {
    long d = 0;
    for (long x : e) d += x;
    return d;
}

std::vector<long> add_expo(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

} // namespace

Presentation presentation(const SectionFamily& fam, size_t degree_bound) {
    size_t g = fam.generators.size();
    auto monos = monomials_up_to(fam.num_coords, degree_bound);
    std::map<std::vector<long>, size_t> mono_index;
    for (size_t m = 0; m < monos.size(); ++m) mono_index[monos[m]] = m;
    size_t cols = g * monos.size(); // unknown coefficient per (generator, monomial)

    // linear conditions per (component, laurent exponent)
    std::map<std::pair<size_t, std::vector<long>>, std::vector<std::pair<size_t, Scalar>>> rows;
    for (size_t i = 0; i < g; ++i)
        for (size_t c = 0; c < fam.rank; ++c) {
            const LaurentEntry& entry = fam.generators[i][c];
            if (entry.coeff.is_zero()) continue;
            for (size_t m = 0; m < monos.size(); ++m) {
                auto key = std::make_pair(c, add_expo(monos[m], entry.expo));
                rows[key].emplace_back(i * monos.size() + m, entry.coeff);
            }
        }
    Matrix sys(rows.size(), cols);
    {
        size_t r = 0;
        for (const auto& [key, terms] : rows) {
            for (const auto& [col, coeff] : terms) sys.at(r, col) += coeff;
            ++r;
        }
    }
    Subspace ker = kernel(sys);

    // minimal generators per degree: quotient by the lower-degree submodule
    Presentation pres;
    pres.degree_bound = degree_bound;
    Subspace lower_module = Subspace::zero(cols); // generated by lower-degree relations
    Subspace lower_K = Subspace::zero(cols);
    std::vector<std::vector<Scalar>> minimal_rows;
    std::vector<size_t> minimal_degrees;
    for (size_t d = 0; d <= degree_bound; ++d) {
        // K_d: kernel vectors supported on monomials of degree <= d
        std::vector<std::vector<Scalar>> coord_basis;
        for (size_t i = 0; i < g; ++i)
            for (size_t m = 0; m < monos.size(); ++m)
                if (total_degree(monos[m]) <= static_cast<long>(d)) {
                    std::vector<Scalar> e(cols);
                    e[i * monos.size() + m] = Scalar(1);
                    coord_basis.push_back(std::move(e));
                }
        Subspace K_d = intersect(ker, Subspace::span(cols, coord_basis));

        // module generated at this degree: lower_K plus its coordinate shifts
        Subspace M_d = sum(lower_module, lower_K);
        for (size_t j = 0; j < fam.num_coords; ++j) {
            std::vector<std::vector<Scalar>> shifted;
            for (size_t r = 0; r < lower_K.dim(); ++r) {
                auto v = lower_K.basis_vector(r);
                std::vector<Scalar> w(cols);
                for (size_t i = 0; i < g; ++i)
                    for (size_t m = 0; m < monos.size(); ++m) {
                        if (v[i * monos.size() + m].is_zero()) continue;
                        auto up = monos[m];
                        up[j] += 1;
                        auto it = mono_index.find(up);
                        if (it != mono_index.end())
                            w[i * monos.size() + it->second] += v[i * monos.size() + m];
                    }
                shifted.push_back(std::move(w));
            }
            M_d = sum(M_d, Subspace::span(cols, shifted));
        }

        for (size_t r = 0; r < K_d.dim(); ++r) {
            auto v = K_d.basis_vector(r);
            if (M_d.contains(v)) continue;
            minimal_rows.push_back(v);
            minimal_degrees.push_back(d);
            M_d = sum(M_d, Subspace::span(cols, {v}));
        }
        lower_module = M_d;
        lower_K = K_d;
    }
    for (size_t r = 0; r < minimal_rows.size(); ++r)
        if (minimal_degrees[r] == degree_bound) pres.degree_bound_reached = true;

    // canonical form: echelonize, then make the trailing coefficient +1
    Matrix relmat(minimal_rows.size(), cols);
    for (size_t r = 0; r < minimal_rows.size(); ++r)
        for (size_t cidx = 0; cidx < cols; ++cidx) relmat.at(r, cidx) = minimal_rows[r][cidx];
    relmat.rref_in_place();
    for (size_t r = 0; r < minimal_rows.size(); ++r) {
        long trailing = -1;
        for (size_t cidx = 0; cidx < cols; ++cidx)
            if (!relmat.at(r, cidx).is_zero()) trailing = static_cast<long>(cidx);
        if (trailing < 0) continue;
        Scalar inv = Scalar(1) / relmat.at(r, trailing);
        PolyRelation rel;
        rel.coeffs.resize(g);
        for (size_t cidx = 0; cidx < cols; ++cidx) {
            if (relmat.at(r, cidx).is_zero()) continue;
            size_t i = cidx / monos.size(), m = cidx % monos.size();
            rel.coeffs[i][monos[m]] = relmat.at(r, cidx) * inv;
        }
        pres.relations.push_back(std::move(rel));
    }
    return pres;
}

size_t fiber_dim(const SectionFamily& fam, const Presentation& pres,
                 const std::vector<Scalar>& point) {
    size_t g = fam.generators.size();
    Matrix eval(pres.relations.size(), g);
    for (size_t r = 0; r < pres.relations.size(); ++r)
        for (size_t i = 0; i < g; ++i)
            for (const auto& [expo, coeff] : pres.relations[r].coeffs[i]) {
                Scalar term = coeff;
                for (size_t j = 0; j < fam.num_coords; ++j)
                    for (long e = 0; e < expo[j]; ++e) term *= point[j];
                eval.at(r, i) += term;
            }
    return g - eval.rank();
}

namespace {

std::vector<ClosurePolynomial> closure_impl(const NilpotentOrbit& orbit,
                                            const SectionFamily& frame,
                                            const std::vector<Scalar>* h_values) {
    size_t d = orbit.lattice_dim;
    size_t k = frame.num_coords;
    std::vector<size_t> idx; // nilpotency index per operator
    for (const auto& N : orbit.N_list) idx.push_back(NilpotentOp::make(N).nilpotency_index);
    if (orbit.N_list.size() != k)
        throw dimension_error("integral closure: one operator per boundary coordinate");

    // enumerate z-monomials gamma with gamma_j < idx_j
    std::vector<std::vector<unsigned>> gammas;
    std::vector<unsigned> cur(k, 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == k) {
            gammas.push_back(cur);
            return;
        }
        for (unsigned e = 0; e < idx[pos]; ++e) {
            cur[pos] = e;
            rec(pos + 1);
        }
        cur[pos] = 0;
    };
    rec(0);

    // coefficient matrix of z^gamma in the lattice section -exp(-sum z N) h
    std::vector<Matrix> Mg;
    for (const auto& gamma : gammas) {
        Matrix M = Matrix::identity(d);
        long fact = 1, total = 0;
        for (size_t j = 0; j < k; ++j) {
            for (unsigned e = 0; e < gamma[j]; ++e) M = M * orbit.N_list[j];
            for (unsigned e = 1; e <= gamma[j]; ++e) fact *= e;
            total += gamma[j];
        }
        Scalar c = Scalar(Rational(1, fact));
        if (total % 2 == 0) c = -c; // -(-1)^{|gamma|}
        Mg.push_back(M * c);
    }

    std::vector<ClosurePolynomial> out;
    for (const auto& gen : frame.generators) {
        ClosurePolynomial poly;
        std::map<std::pair<std::vector<unsigned>, std::vector<long>>, std::vector<Scalar>>
            terms;
        for (size_t gi = 0; gi < gammas.size(); ++gi) {
            // linear form row: sum_c gen_c coeff * (Q Mg)_{c,*}
            Matrix QM = orbit.Q * Mg[gi];
            std::map<std::vector<long>, std::vector<Scalar>> per_expo;
            for (size_t c = 0; c < d; ++c) {
                const LaurentEntry& e = gen[c];
                if (e.coeff.is_zero()) continue;
                auto& row = per_expo[e.expo];
                row.resize(d);
                for (size_t b = 0; b < d; ++b)
                    if (!QM.at(c, b).is_zero()) row[b] += e.coeff * QM.at(c, b);
            }
            for (auto& [expo, row] : per_expo) {
                bool nonzero = false;
                for (const auto& x : row) nonzero |= !x.is_zero();
                if (!nonzero) continue;
                auto& acc = terms[{gammas[gi], expo}];
                acc.resize(d);
                for (size_t b = 0; b < d; ++b) acc[b] += row[b];
            }
        }
        for (auto& [key, row] : terms) {
            bool nonzero = false;
            for (const auto& x : row) nonzero |= !x.is_zero();
            if (!nonzero) continue;
            ClosureTerm t;
            t.z_expo = key.first;
            t.s_expo = key.second;
            if (h_values) {
                Scalar val;
                for (size_t b = 0; b < d; ++b) val += row[b] * (*h_values)[b];
                if (val.is_zero()) continue;
                t.h_linear = {val};
            } else {
                t.h_linear = row;
            }
            poly.terms.push_back(std::move(t));
        }
        out.push_back(std::move(poly));
    }
    return out;
}

} // namespace

std::vector<ClosurePolynomial> integral_closure(const NilpotentOrbit& orbit,
                                                const SectionFamily& frame) {
    return closure_impl(orbit, frame, nullptr);
}

std::vector<ClosurePolynomial> integral_closure_at(const NilpotentOrbit& orbit,
                                                   const SectionFamily& frame,
                                                   const std::vector<Scalar>& h) {
    if (h.size() != orbit.lattice_dim)
        throw dimension_error("integral closure: lattice vector length mismatch");
    return closure_impl(orbit, frame, &h);
}

FiberClassification fiber_classification(const NilpotentOrbit& orbit,
                                         const SectionFamily& frame, size_t degree_bound) {
    size_t k = frame.num_coords;
    size_t d = orbit.lattice_dim;
    Presentation pres = presentation(frame, degree_bound);
    auto closures = integral_closure(orbit, frame);

    FiberClassification out;
    out.ok = true;
    for (size_t mask = 0; mask < (1u << k); ++mask) {
        StratumReport rep;
        rep.vanishing.resize(k);
        std::vector<Scalar> point(k);
        for (size_t j = 0; j < k; ++j) {
            rep.vanishing[j] = (mask >> j) & 1;
            point[j] = rep.vanishing[j] ? Scalar(0) : Scalar(1);
        }
        rep.fiber_dimension = fiber_dim(frame, pres, point);

        // bounded lattice: all polar coefficients vanish on the stratum
        std::vector<std::vector<Scalar>> constraints; // rows over Q: re and im parts
        for (const auto& poly : closures)
            for (const auto& term : poly.terms) {
                bool polar = false;
                for (size_t j = 0; j < k; ++j)
                    if (rep.vanishing[j] && term.s_expo[j] < 0) polar = true;
                if (!polar) continue;
                std::vector<Scalar> re(d), im(d);
                for (size_t b = 0; b < d; ++b) {
                    re[b] = Scalar(term.h_linear[b].re());
                    im[b] = Scalar(term.h_linear[b].im());
                }
                constraints.push_back(std::move(re));
                constraints.push_back(std::move(im));
            }
        size_t rank = 0;
        if (!constraints.empty()) {
            Matrix C(constraints.size(), d);
            for (size_t r = 0; r < constraints.size(); ++r)
                for (size_t c = 0; c < d; ++c) C.at(r, c) = constraints[r][c];
            rank = C.rank();
        }
        rep.bounded_lattice_rank = d - rank;
        rep.odd_bounded_rank = (rep.bounded_lattice_rank % 2 != 0);
        if (rep.odd_bounded_rank) out.ok = false;
        rep.torus_rank = rep.bounded_lattice_rank / 2;
        rep.vector_dim = rep.fiber_dimension > rep.torus_rank
                             ? rep.fiber_dimension - rep.torus_rank
                             : 0;
        out.strata.push_back(std::move(rep));
    }
    return out;
}

DeligneFrame deligne_residue_frame(const Matrix& T, unsigned cyclotomic_bound) {
    DeligneFrame frame;
    frame.residues = cyclotomic_exponents(T, cyclotomic_bound);
    for (const auto& r : frame.residues)
        frame.description.push_back("rank-one frame section with connection residue " +
                                    rational_str(r));
    return frame;
}

} // namespace hodgecalc
