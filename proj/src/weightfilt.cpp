#include "hodgecalc/weightfilt.hpp"

namespace hodgecalc {

NilpotentOp NilpotentOp::make(const Matrix& N) {
    if (!N.is_square()) throw dimension_error("NilpotentOp: not square");
    size_t n = N.rows();
    Matrix p = Matrix::identity(n);
    size_t e = 0;
    while (e <= n && !p.is_zero()) {
        p = p * N;
        ++e;
    }
    if (!p.is_zero()) throw NotNilpotent("operator is not nilpotent");
    return NilpotentOp{N, n, e};
}

std::vector<std::pair<long, size_t>> WeightFiltration::graded_dims() const {
    std::vector<std::pair<long, size_t>> out;
    for (const auto& [idx, d] : filtration.graded_dims())
        out.emplace_back(static_cast<long>(numerator(idx)), d);
    return out;
}

WeightFiltration monodromy_weight_filtration(const NilpotentOp& op, long w) {
    const Matrix& N = op.N;
    size_t n = op.ambient_dim;
    long e = static_cast<long>(op.nilpotency_index);

    std::vector<Matrix> Np{Matrix::identity(n)};
    for (long j = 1; j <= e; ++j) Np.push_back(Np.back() * N);
    auto kerp = [&](long i) {
        return i >= e ? Subspace::full(n) : kernel(Np[i]);
    };
    auto imp = [&](long j) { return j >= e ? Subspace::zero(n) : image(Np[j]); };

    std::vector<std::pair<Rational, Subspace>> steps;
    for (long k = -e; k <= e; ++k) {
        // W_{w+k} = sum over i-j = k of ker N^{i+1} cap im N^j
        Subspace Wk = Subspace::zero(n);
        for (long j = 0; j <= e; ++j) {
            long i = k + j;
            if (i < 0) continue;
            Wk = sum(Wk, intersect(kerp(i + 1), imp(j)));
        }
        steps.emplace_back(Rational(w + k), Wk);
    }
    WeightFiltration W{w, FlagFiltration::from_steps(n, true, std::move(steps))};
    if (!is_monodromy_weight_filtration(N, W))
        throw std::logic_error("monodromy filtration construction failed verification");
    return W;
}

bool is_monodromy_weight_filtration(const Matrix& N, const WeightFiltration& W) {
    size_t n = N.rows();
    if (n > 0 && !W.filtration.is_exhaustive()) return false;
    const auto& steps = W.filtration.steps();
    if (steps.empty()) return n == 0;
    long lo = static_cast<long>(numerator(steps.front().first)) - 1;
    long hi = static_cast<long>(numerator(steps.back().first)) + 1;
    for (long k = lo; k <= hi; ++k) {
        if (!W.at(k - 2).contains(apply(N, W.at(k)))) return false;
    }
    for (long k = 1; k <= hi - W.center; ++k) {
        GradedPiece src = graded_piece(W, W.center + k);
        GradedPiece dst = graded_piece(W, W.center - k);
        if (src.quot.projection.rows() != dst.quot.projection.rows()) return false;
        size_t d = src.quot.projection.rows();
        if (d == 0) continue;
        Matrix Nk = Matrix::identity(n);
        for (long j = 0; j < k; ++j) Nk = Nk * N;
        Matrix induced = dst.quot.projection * (Nk * src.quot.section.transpose());
        if (induced.rank() != d) return false;
    }
    return true;
}

GradedPiece graded_piece(const WeightFiltration& W, long k) {
    Subspace Wk = W.at(k);
    Subspace Wk1 = W.at(k - 1);
    return GradedPiece{k, quotient_map(Wk, Wk1), Wk};
}

Matrix induced_on_graded(const Matrix& A, const WeightFiltration& W, long from, long to) {
    GradedPiece src = graded_piece(W, from);
    GradedPiece dst = graded_piece(W, to);
    return dst.quot.projection * (A * src.quot.section.transpose());
}

namespace {

// Section search for the graded lifting step: find sigma: Gr -> W_top with
// pi sigma = id and (N sigma - sigma Nbar)(Mbar_k) inside Mprime_{k-2} for all k.
// Any section is S0 + A^T X, so this is a linear system in X.
std::optional<Matrix> find_compatible_section(const Matrix& N, const Subspace& A,
                                              const QuotientMap& pi,
                                              const FlagFiltration& Mprime,
                                              const WeightFiltration& Mbar) {
    size_t n = N.rows();
    size_t q = pi.projection.rows();
    const Matrix S0 = pi.section.transpose(); // n x q
    if (q == 0) return S0;
    size_t a = A.dim();
    const Matrix At = A.basis().transpose(); // n x a
    const Matrix NAt = N * At;
    Matrix Nbar = pi.projection * (N * S0); // q x q

    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    size_t nx = a * q;
    for (const auto& [lvlQ, Mk] : Mbar.filtration.steps()) {
        long lvl = static_cast<long>(numerator(lvlQ));
        Subspace target = Mprime.at(Rational(lvl - 2));
        QuotientMap qm = quotient_map(Subspace::full(n), target);
        const Matrix& Q = qm.projection;
        for (size_t bv = 0; bv < Mk.dim(); ++bv) {
            std::vector<Scalar> v = Mk.basis_vector(bv);
            std::vector<Scalar> Nbv = Nbar.apply(v);
            std::vector<Scalar> w0 = N.apply(S0.apply(v));
            {
                auto s0nb = S0.apply(Nbv);
                for (size_t i = 0; i < n; ++i) w0[i] -= s0nb[i];
            }
            // w(X) = w0 + NAt (X v) - At (X Nbv); require Q w(X) = 0
            for (size_t r = 0; r < Q.rows(); ++r) {
                std::vector<Scalar> row(nx);
                Scalar c0;
                for (size_t i = 0; i < n; ++i) {
                    const Scalar& qri = Q.at(r, i);
                    if (qri.is_zero()) continue;
                    c0 += qri * w0[i];
                    for (size_t s = 0; s < a; ++s) {
                        for (size_t t = 0; t < q; ++t) {
                            Scalar coef = NAt.at(i, s) * v[t] - At.at(i, s) * Nbv[t];
                            if (!coef.is_zero()) row[s * q + t] += qri * coef;
                        }
                    }
                }
                rows.push_back(std::move(row));
                rhs.push_back(-c0);
            }
        }
    }
    if (rows.empty()) return S0;
    Matrix Amat(rows.size(), nx);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < nx; ++j) Amat.at(i, j) = rows[i][j];
    SolveResult sol = solve(Amat, rhs);
    if (!sol.consistent) return std::nullopt;
    Matrix X(a, q);
    for (size_t s = 0; s < a; ++s)
        for (size_t t = 0; t < q; ++t) X.at(s, t) = sol.x[s * q + t];
    return S0 + At * X;
}

} // namespace

std::optional<WeightFiltration> relative_monodromy_filtration(const NilpotentOp& op,
                                                              const FlagFiltration& W) {
    const Matrix& N = op.N;
    size_t n = op.ambient_dim;
    if (W.ambient_dim() != n) throw dimension_error("relative filtration: ambient mismatch");
    if (n > 0 && !W.is_exhaustive())
        throw dimension_error("relative filtration: W not exhaustive");
    for (const auto& [idx, s] : W.steps())
        if (!s.contains(apply(N, s)))
            throw NPreservesWViolated("N does not preserve W at index " + rational_str(idx));

    // distinct nonzero jumps of W, ascending
    std::vector<std::pair<long, Subspace>> jumps;
    for (const auto& [idx, s] : W.steps()) {
        if (denominator(idx) != 1)
            throw dimension_error("relative filtration: W must have integer indices");
        size_t prev = jumps.empty() ? 0 : jumps.back().second.dim();
        if (s.dim() > prev) jumps.emplace_back(static_cast<long>(numerator(idx)), s);
    }
    if (jumps.empty()) return WeightFiltration{0, FlagFiltration(n, true)};

    FlagFiltration M(n, true);
    long mlo = jumps.front().first, mhi = jumps.front().first;
    Subspace below = Subspace::zero(n);
    for (const auto& [lvl, Wl] : jumps) {
        QuotientMap pi = quotient_map(Wl, below);
        Matrix Nbar = pi.projection * (N * pi.section.transpose());
        NilpotentOp nb = NilpotentOp::make(Nbar);
        WeightFiltration Mbar = monodromy_weight_filtration(nb, lvl);

        auto sigma = find_compatible_section(N, below, pi, M, Mbar);
        if (!sigma) return std::nullopt;

        long e = static_cast<long>(std::max<size_t>(nb.nilpotency_index, 1));
        long lo = std::min(M.steps().empty() ? lvl - e : mlo, lvl - e);
        long hi = std::max(M.steps().empty() ? lvl + e : mhi, lvl + e);
        std::vector<std::pair<Rational, Subspace>> steps;
        for (long k = lo; k <= hi; ++k) {
            Subspace part = M.at(Rational(k));
            Subspace mb = Mbar.at(k);
            std::vector<std::vector<Scalar>> lifts;
            for (size_t r = 0; r < mb.dim(); ++r)
                lifts.push_back(sigma->apply(mb.basis_vector(r)));
            steps.emplace_back(Rational(k), sum(part, Subspace::span(n, lifts)));
        }
        M = FlagFiltration::from_steps(n, true, std::move(steps));
        mlo = lo;
        mhi = hi;
        below = Wl;
    }

    WeightFiltration result{jumps.back().first, M};
    // post-verify against the characterizing conditions
    for (long k = mlo - 1; k <= mhi + 1; ++k)
        if (!result.filtration.at(Rational(k - 2))
                 .contains(apply(N, result.filtration.at(Rational(k)))))
            return std::nullopt;
    below = Subspace::zero(n);
    for (const auto& [lvl, Wl] : jumps) {
        QuotientMap pi = quotient_map(Wl, below);
        Matrix Nbar = pi.projection * (N * pi.section.transpose());
        WeightFiltration Mbar = monodromy_weight_filtration(NilpotentOp::make(Nbar), lvl);
        for (long k = mlo - 1; k <= mhi + 1; ++k) {
            Subspace mk = intersect(result.filtration.at(Rational(k)), Wl);
            std::vector<std::vector<Scalar>> proj;
            for (size_t r = 0; r < mk.dim(); ++r)
                proj.push_back(pi.projection.apply(mk.basis_vector(r)));
            Subspace induced = Subspace::span(pi.projection.rows(), proj);
            if (induced != Mbar.at(k)) return std::nullopt;
        }
        below = Wl;
    }
    return result;
}

std::vector<PrimitivePart> primitive_parts(const NilpotentOp& op, const WeightFiltration& W) {
    if (!is_monodromy_weight_filtration(op.N, W))
        throw FiltrationNotAdapted("W is not the monodromy filtration of N");
    std::vector<PrimitivePart> out;
    size_t n = op.ambient_dim;
    long top = W.center;
    for (const auto& [lvl, d] : W.graded_dims()) top = std::max(top, lvl);
    for (long l = W.center; l <= top; ++l) {
        GradedPiece g = graded_piece(W, l);
        size_t d = g.quot.projection.rows();
        if (d == 0) continue;
        long k = l - W.center;
        Matrix Nk1 = Matrix::identity(n);
        for (long j = 0; j <= k; ++j) Nk1 = Nk1 * op.N;
        Matrix down = induced_on_graded(Nk1, W, l, l - 2 * k - 2);
        Subspace P = kernel(down);
        Matrix reps(P.dim(), n);
        for (size_t r = 0; r < P.dim(); ++r) {
            auto amb = g.quot.section.transpose().apply(P.basis_vector(r));
            for (size_t j = 0; j < n; ++j) reps.at(r, j) = amb[j];
        }
        out.push_back(PrimitivePart{l, P, reps});
    }
    return out;
}

} // namespace hodgecalc
