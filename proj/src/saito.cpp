#include "hodgecalc/saito.hpp"

#include <algorithm>
#include <set>

namespace hodgecalc {

Scalar laurent_residue(const std::map<long, Scalar>& series) {
    auto it = series.find(-1);
    return it == series.end() ? Scalar(0) : it->second;
}

std::map<long, Matrix> geometric_inverse(const Matrix& N, size_t terms) {
    std::map<long, Matrix> out;
    Matrix pw = Matrix::identity(N.rows());
    for (size_t j = 0; j < terms; ++j) {
        out[-1 - static_cast<long>(j)] = pw;
        pw = pw * N;
    }
    return out;
}

JordanRing jordan_ring(size_t l) {
    if (l < 1) throw dimension_error("jordan_ring: need l >= 1");
    JordanRing r;
    r.l = l;
    r.shift = Matrix::zero(l, l);
    for (size_t i = 0; i + 1 < l; ++i) r.shift.at(i + 1, i) = Scalar(1); // N' e_i = e_{i+1}
    r.pairing = Matrix::zero(l, l);
    for (size_t i = 0; i < l; ++i)
        r.pairing.at(i, l - 1 - i) = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
    return r;
}

Matrix jordan_can(size_t l) {
    if (l < 2) throw dimension_error("jordan_can: need l >= 2");
    Matrix m = Matrix::zero(l - 1, l);
    for (size_t i = 0; i + 1 < l; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix jordan_var(size_t l) {
    if (l < 2) throw dimension_error("jordan_var: need l >= 2");
    Matrix m = Matrix::zero(l, l - 1);
    for (size_t i = 0; i + 1 < l; ++i) m.at(i + 1, i) = Scalar(1);
    return m;
}

PolarizedInput PolarizedInput::make(size_t dim, FlagFiltration F, FlagFiltration W,
                                    std::vector<Matrix> N_list, std::vector<long> m_list,
                                    Matrix S, long w) {
    if (m_list.empty()) m_list.assign(N_list.size(), 1);
    if (m_list.size() != N_list.size())
        throw dimension_error("polarized input: multiplicity list length mismatch");
    for (long m : m_list)
        if (m < 1) throw dimension_error("polarized input: multiplicities must be positive");
    Matrix total = Matrix::zero(dim, dim);
    for (size_t i = 0; i < N_list.size(); ++i) {
        if (N_list[i].rows() != dim || N_list[i].cols() != dim)
            throw dimension_error("polarized input: nilpotent shape mismatch");
        for (size_t j = i + 1; j < N_list.size(); ++j)
            if (N_list[i] * N_list[j] != N_list[j] * N_list[i])
                throw NonCommutingNilpotents("operators " + std::to_string(i) + " and " +
                                             std::to_string(j) + " do not commute");
        total = total + N_list[i];
    }
    WeightFiltration expected = monodromy_weight_filtration(NilpotentOp::make(total), w);
    if (!W.same_filtration(expected.filtration))
        throw HypothesisWViolated("W is not the monodromy filtration of the sum, shifted");
    return PolarizedInput{dim, std::move(F), std::move(W), std::move(N_list),
                          std::move(m_list), std::move(S), w};
}

namespace {

// complete homogeneous symmetric polynomial of degree d in commuting matrices
Matrix complete_homogeneous(const std::vector<Matrix>& A, size_t d, size_t n) {
    Matrix acc = Matrix::zero(n, n);
    // iterate over weakly increasing index sequences of length d
    std::vector<size_t> idx(d, 0);
    if (d == 0) return Matrix::identity(n);
    for (;;) {
        Matrix term = Matrix::identity(n);
        for (size_t j : idx) term = term * A[j];
        acc = acc + term;
        // next weakly increasing sequence
        size_t k = d;
        while (k > 0 && idx[k - 1] == A.size() - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (size_t j = k; j < d; ++j) idx[j] = idx[k - 1];
    }
    return acc;
}

// coefficients of prod (s - A_i): index r -> matrix coefficient of s^r
std::vector<Matrix> char_product(const std::vector<Matrix>& A, size_t n) {
    std::vector<Matrix> coef{Matrix::identity(n)};
    for (const Matrix& Ai : A) {
        std::vector<Matrix> next(coef.size() + 1, Matrix::zero(n, n));
        for (size_t r = 0; r < coef.size(); ++r) {
            next[r + 1] = next[r + 1] + coef[r];
            next[r] = next[r] - Ai * coef[r];
        }
        coef = std::move(next);
    }
    return coef;
}

} // namespace

ExtendedStructure extend(const PolarizedInput& in, const std::vector<size_t>& I) {
    size_t n = in.dim;
    size_t l = I.size();
    if (l == 0) throw dimension_error("extend: empty index set");
    for (size_t i : I)
        if (i >= in.N_list.size()) throw dimension_error("extend: index out of range");

    std::vector<Matrix> A;
    for (size_t i : I) {
        Matrix Ai = in.N_list[i];
        Scalar inv = Scalar(1) / Scalar(in.m_list[i]);
        A.push_back(Ai * inv);
    }

    size_t dim = n * l;
    ExtendedStructure ext;
    ext.dim = dim;
    ext.l = l;
    ext.weight = in.w + static_cast<long>(l) - 1;

    // s-action: shift degrees, reducing s^l by the product relation
    auto poly = char_product(A, n); // sum_r poly[r] s^r = prod (s - A_i), poly[l] = I
    ext.s_action = Matrix::zero(dim, dim);
    for (size_t j = 0; j + 1 < l; ++j)
        for (size_t i = 0; i < n; ++i) ext.s_action.at((j + 1) * n + i, j * n + i) = Scalar(1);
    for (size_t r = 0; r < l; ++r) {
        // s^l = - sum_r poly[r] s^r  in the quotient
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                ext.s_action.at(r * n + i, (l - 1) * n + j) -= poly[r].at(i, j);
    }

    ext.total_nilpotent = ext.s_action;
    for (size_t i = 0; i < in.N_list.size(); ++i) {
        Matrix Ni = Matrix::zero(dim, dim);
        for (size_t j = 0; j < l; ++j)
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    Ni.at(j * n + a, j * n + b) = in.N_list[i].at(a, b);
        Matrix Nt = Ni + ext.s_action * Scalar(in.m_list[i]);
        ext.total_nilpotent = ext.total_nilpotent + Nt;
        ext.N_tilde.push_back(std::move(Nt));
    }

    // shifted filtrations on the quotient basis
    auto shift_filtration = [&](const FlagFiltration& base, bool increasing,
                                long step_per_degree) {
        std::set<Rational> indices;
        for (const auto& [idx, s] : base.steps())
            for (size_t j = 0; j < l; ++j)
                indices.insert(Rational(idx + step_per_degree * static_cast<long>(j)));
        std::vector<std::pair<Rational, Subspace>> steps;
        for (const Rational& idx : indices) {
            Subspace acc = Subspace::zero(dim);
            for (size_t j = 0; j < l; ++j) {
                Rational base_idx = idx - step_per_degree * static_cast<long>(j);
                Subspace piece = base.at(base_idx);
                std::vector<std::vector<Scalar>> lifted;
                for (size_t r = 0; r < piece.dim(); ++r) {
                    std::vector<Scalar> v(dim);
                    auto b = piece.basis_vector(r);
                    for (size_t i = 0; i < n; ++i) v[j * n + i] = b[i];
                    lifted.push_back(std::move(v));
                }
                acc = sum(acc, Subspace::span(dim, lifted));
            }
            steps.emplace_back(idx, acc);
        }
        return FlagFiltration::from_steps(dim, increasing, steps);
    };
    // F~^p = sum F^{p-j} (x) s^j (decreasing), W~_k = sum W_{k-2j} (x) s^j
    ext.F = shift_filtration(in.F, false, 1);
    ext.W_shifted = shift_filtration(in.W, true, 2);

    ext.W = monodromy_weight_filtration(NilpotentOp::make(ext.total_nilpotent), ext.weight);

    // pairing from the residue formula, with the multiplicity unit
    Scalar kappa(1);
    for (size_t i : I) kappa = kappa / Scalar(in.m_list[i]);
    std::vector<Matrix> C(2 * l, Matrix::zero(n, n)); // C[r] for r = j + k + 1
    for (size_t r = l; r < 2 * l; ++r) C[r] = complete_homogeneous(A, r - l, n);
    ext.S_tilde = Matrix::zero(dim, dim);
    for (size_t j = 0; j < l; ++j)
        for (size_t k = 0; k < l; ++k) {
            size_t r = j + k + 1;
            if (r < l) continue;
            Matrix block = in.S * C[r] * kappa;
            if (j % 2 == 1) block = -block;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    ext.S_tilde.at(j * n + a, k * n + b) = block.at(a, b);
        }
    return ext;
}

WeightCheck weight_check(const ExtendedStructure& ext, const PolarizedInput& in) {
    WeightCheck wc;
    long expected_center = in.w + static_cast<long>(ext.l) - 1;
    wc.center_ok = (ext.W.center == expected_center);
    wc.axioms = is_monodromy_weight_filtration(ext.total_nilpotent, ext.W);
    WeightFiltration recomputed = monodromy_weight_filtration(
        NilpotentOp::make(ext.total_nilpotent), expected_center);
    wc.matches_recomputed = ext.W.filtration.same_filtration(recomputed.filtration);
    wc.graded_dims = recomputed.graded_dims();
    wc.passed = wc.center_ok && wc.axioms && wc.matches_recomputed;
    return wc;
}

std::optional<Matrix> tensor_congruence(const ExtendedStructure& ext,
                                        const PolarizedInput& in) {
    size_t n = in.dim, l = ext.l, dim = ext.dim;
    JordanRing ring = jordan_ring(l);
    Matrix target = Matrix::zero(dim, dim);
    for (size_t j = 0; j < l; ++j)
        for (size_t k = 0; k < l; ++k) {
            if (ring.pairing.at(j, k).is_zero()) continue;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    target.at(j * n + a, k * n + b) = ring.pairing.at(j, k) * in.S.at(a, b);
        }

    // unknown congruence P = I + E with E supported on degree-lowering blocks
    std::vector<std::pair<size_t, size_t>> slots; // (to-degree, from-degree), to < from
    for (size_t from = 0; from < l; ++from)
        for (size_t to = 0; to < from; ++to) slots.emplace_back(to, from);
    size_t nx = slots.size() * n * n;

    Matrix P = Matrix::identity(dim);
    for (size_t round = 0; round < 2 * l + 2; ++round) {
        Matrix R = P.transpose() * ext.S_tilde * P - target;
        if (R.is_zero()) return P;
        if (nx == 0) return std::nullopt;
        // solve target*E + E^T*target = -R over the slot entries
        Matrix sys(dim * dim, nx);
        std::vector<Scalar> rhs(dim * dim);
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c) rhs[r * dim + c] = -R.at(r, c);
        for (size_t sidx = 0; sidx < slots.size(); ++sidx) {
            auto [to, from] = slots[sidx];
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    size_t col = sidx * n * n + a * n + b;
                    size_t erow = to * n + a, ecol = from * n + b;
                    // (target * E) entry (r, ecol) += target(r, erow)
                    for (size_t r = 0; r < dim; ++r) {
                        if (!target.at(r, erow).is_zero())
                            sys.at(r * dim + ecol, col) += target.at(r, erow);
                        // (E^T * target) entry (ecol, c) += target(erow, c)
                        if (!target.at(erow, r).is_zero())
                            sys.at(ecol * dim + r, col) += target.at(erow, r);
                    }
                }
        }
        SolveResult sol = solve(sys, rhs);
        if (!sol.consistent) return std::nullopt;
        Matrix E = Matrix::zero(dim, dim);
        for (size_t sidx = 0; sidx < slots.size(); ++sidx) {
            auto [to, from] = slots[sidx];
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    E.at(to * n + a, from * n + b) = sol.x[sidx * n * n + a * n + b];
        }
        P = P * (Matrix::identity(dim) + E);
    }
    Matrix R = P.transpose() * ext.S_tilde * P - target;
    if (R.is_zero()) return P;
    return std::nullopt;
}

} // namespace hodgecalc
