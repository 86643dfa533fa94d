#include "hodgecalc/mhs.hpp"

#include <algorithm>
#include <set>

namespace hodgecalc {

SplitMHS SplitMHS::make(size_t dim, std::map<std::pair<long, long>, Subspace> pieces,
                        Matrix conj) {
    SplitMHS H;
    H.dim_ = dim;
    H.pieces_ = std::move(pieces);
    H.conj_ = std::move(conj);

    size_t total = 0;
    Matrix stacked(0, dim);
    for (const auto& [pq, s] : H.pieces_) {
        if (s.ambient_dim() != dim) throw dimension_error("bigrading: ambient mismatch");
        total += s.dim();
        stacked = stacked.vstack(s.basis());
    }
    if (total != dim || Subspace::span(stacked).dim() != dim)
        throw dimension_error("bigrading: pieces do not split the space");
    if (H.conj_.rows() != dim || H.conj_.cols() != dim)
        throw dimension_error("conjugation: wrong shape");
    if (H.conj_ * H.conj_.conj() != Matrix::identity(dim))
        throw dimension_error("conjugation: not an involution");
    for (const auto& [pq, s] : H.pieces_) {
        auto it = H.pieces_.find({pq.second, pq.first});
        if (it == H.pieces_.end())
            throw dimension_error("bigrading: missing conjugate piece");
        std::vector<std::vector<Scalar>> imgs;
        for (size_t r = 0; r < s.dim(); ++r) imgs.push_back(H.conjugate(s.basis_vector(r)));
        if (Subspace::span(dim, imgs) != it->second)
            throw dimension_error("conjugation does not swap the bigrading");
    }
    return H;
}

std::vector<Scalar> SplitMHS::conjugate(const std::vector<Scalar>& x) const {
    std::vector<Scalar> xb(x.size());
    for (size_t i = 0; i < x.size(); ++i) xb[i] = x[i].conj();
    return conj_.apply(xb);
}

FlagFiltration SplitMHS::weight_filtration() const {
    std::set<long> levels;
    for (const auto& [pq, s] : pieces_) levels.insert(pq.first + pq.second);
    std::vector<std::pair<Rational, Subspace>> steps;
    for (long w : levels) {
        Subspace acc = Subspace::zero(dim_);
        for (const auto& [pq, s] : pieces_)
            if (pq.first + pq.second <= w) acc = sum(acc, s);
        steps.emplace_back(Rational(w), acc);
    }
    return FlagFiltration::from_steps(dim_, true, std::move(steps));
}

FlagFiltration SplitMHS::hodge_filtration() const {
    std::set<long> ps;
    for (const auto& [pq, s] : pieces_) ps.insert(pq.first);
    std::vector<std::pair<Rational, Subspace>> steps;
    for (long p : ps) {
        Subspace acc = Subspace::zero(dim_);
        for (const auto& [pq, s] : pieces_)
            if (pq.first >= p) acc = sum(acc, s);
        steps.emplace_back(Rational(p), acc);
    }
    return FlagFiltration::from_steps(dim_, false, std::move(steps));
}

std::vector<long> SplitMHS::weight_levels() const {
    std::set<long> levels;
    for (const auto& [pq, s] : pieces_)
        if (s.dim() > 0) levels.insert(pq.first + pq.second);
    return {levels.begin(), levels.end()};
}

Subspace SplitMHS::level_subspace(long w) const {
    Subspace acc = Subspace::zero(dim_);
    for (const auto& [pq, s] : pieces_)
        if (pq.first + pq.second == w) acc = sum(acc, s);
    return acc;
}

SplitMHS SplitMHS::tate_twist(long k) const {
    std::map<std::pair<long, long>, Subspace> twisted;
    for (const auto& [pq, s] : pieces_) twisted[{pq.first - k, pq.second - k}] = s;
    return make(dim_, std::move(twisted), conj_);
}

Polarization Polarization::make(long weight, Matrix S) {
    if (!S.is_square()) throw dimension_error("polarization: not square");
    Scalar sign = (weight % 2 == 0) ? Scalar(1) : Scalar(-1);
    if (S.transpose() != S * sign)
        throw dimension_error("polarization: wrong symmetry for the weight");
    return Polarization{weight, std::move(S)};
}

namespace {

Scalar pair_with(const Matrix& S, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar acc;
    for (size_t i = 0; i < S.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < S.cols(); ++j)
            if (!S.at(i, j).is_zero() && !y[j].is_zero()) acc += x[i] * S.at(i, j) * y[j];
    }
    return acc;
}

Scalar weil_factor(long p, long q) { return Scalar::i().pow(p - q); }

} // namespace

BilinearRelationReport check_first_bilinear_relation(const SplitMHS& H, const Polarization& S) {
    auto levels = H.weight_levels();
    if (levels.size() != 1 || levels[0] != S.weight)
        throw WeightMismatch("structure is not pure of the polarization weight");
    long n = S.weight;
    BilinearRelationReport rep;
    rep.holds = true;
    for (const auto& [pq1, s1] : H.pieces())
        for (const auto& [pq2, s2] : H.pieces()) {
            if (pq1.first + pq2.first <= n) continue;
            for (size_t a = 0; a < s1.dim() && rep.holds; ++a)
                for (size_t b = 0; b < s2.dim() && rep.holds; ++b)
                    if (!pair_with(S.S, s1.basis_vector(a), s2.basis_vector(b)).is_zero()) {
                        rep.holds = false;
                        rep.witness = {{pq1.first, pq1.second}, {pq2.first, pq2.second}};
                    }
        }
    return rep;
}

PositivityReport check_positivity(const SplitMHS& H, const Polarization& S,
                                  const NilpotentOp& N) {
    size_t n = H.dim();
    if (N.ambient_dim != n) throw dimension_error("check_positivity: ambient mismatch");
    // N must shift the bigrading by (-1,-1)
    for (const auto& [pq, s] : H.pieces()) {
        auto it = H.pieces().find({pq.first - 1, pq.second - 1});
        Subspace target = it == H.pieces().end() ? Subspace::zero(n) : it->second;
        if (!target.contains(apply(N.N, s)))
            throw FiltrationNotAdapted("nilpotent does not shift the bigrading by (-1,-1)");
    }
    WeightFiltration W = monodromy_weight_filtration(N, S.weight);

    PositivityReport rep;
    rep.orthogonal = true;
    rep.definite = true;

    long top = W.center;
    for (auto [k, d] : W.graded_dims()) top = std::max(top, k);
    for (long l = W.center; l <= top; ++l) {
        long k = l - W.center;
        Matrix Nk = Matrix::identity(n);
        for (long j = 0; j < k; ++j) Nk = Nk * N.N;
        Matrix Nk1 = Nk * N.N;

        // primitive vectors inside each bigraded piece of this level
        std::vector<std::tuple<long, long, Matrix>> blocks; // (p, q, basis rows)
        for (const auto& [pq, s] : H.pieces()) {
            if (pq.first + pq.second != l || s.dim() == 0) continue;
            // P = s cap ker N^{k+1}
            Subspace P = intersect(s, kernel(Nk1));
            if (P.dim() == 0) continue;
            blocks.emplace_back(pq.first, pq.second, P.basis());
        }

        // cross-block orthogonality of the twisted pairing
        for (size_t b1 = 0; b1 < blocks.size(); ++b1)
            for (size_t b2 = 0; b2 < blocks.size(); ++b2) {
                if (b1 == b2) continue;
                const auto& [p1, q1, B1] = blocks[b1];
                const auto& [p2, q2, B2] = blocks[b2];
                (void)p2;
                (void)q2;
                for (size_t a = 0; a < B1.rows(); ++a)
                    for (size_t b = 0; b < B2.rows(); ++b) {
                        auto y = Nk.apply(H.conjugate(B2.row(b)));
                        if (!pair_with(S.S, B1.row(a), y).is_zero()) rep.orthogonal = false;
                    }
            }

        // blockwise Gram, one overall unit per level
        std::optional<Scalar> level_unit;
        for (const auto& [p, q, B] : blocks) {
            Matrix G(B.rows(), B.rows());
            for (size_t a = 0; a < B.rows(); ++a)
                for (size_t b = 0; b < B.rows(); ++b)
                    G.at(a, b) =
                        weil_factor(p, q) * pair_with(S.S, B.row(a), Nk.apply(H.conjugate(B.row(b))));
            PositivityBlock blk;
            blk.level = l;
            blk.p = p;
            blk.q = q;
            blk.dim = B.rows();
            bool found = false;
            for (Scalar unit : {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()}) {
                Matrix cG = G * unit;
                if (cG != cG.conj_transpose()) continue;
                found = true;
                blk.unit = unit;
                bool pos = true, neg = true;
                try {
                    pos = is_positive_definite(cG, true);
                } catch (const dimension_error&) {
                    pos = false;
                }
                try {
                    neg = is_positive_definite(-cG, true);
                } catch (const dimension_error&) {
                    neg = false;
                }
                blk.positive = pos;
                blk.negative = neg;
                break;
            }
            if (!found) throw NonHermitianGram("no unit renders the Gram block hermitian");
            // one overall unit per level: definite blocks must share it up to sign
            if (!blk.positive && !blk.negative) rep.definite = false;
            Scalar normalized = blk.positive ? blk.unit : -blk.unit;
            if (level_unit && !(*level_unit == normalized)) rep.definite = false;
            if (!level_unit) level_unit = normalized;
            rep.blocks.push_back(blk);
        }
    }
    return rep;
}

AdmissibilityReport check_admissibility(const SplitMHS& H, const NilpotentOp& N,
                                        const std::map<long, Matrix>& graded_polarizations) {
    return check_admissibility(H.weight_filtration(), H, N, graded_polarizations);
}

AdmissibilityReport check_admissibility(const FlagFiltration& W, const SplitMHS& H,
                                        const NilpotentOp& N,
                                        const std::map<long, Matrix>& graded_polarizations) {
    AdmissibilityReport rep;
    try {
        auto M = relative_monodromy_filtration(N, W);
        rep.n_preserves_w = true;
        rep.relative_filtration_exists = M.has_value();
        if (!M) rep.reasons.push_back("relative monodromy filtration does not exist");
    } catch (const NPreservesWViolated& e) {
        rep.n_preserves_w = false;
        rep.relative_filtration_exists = false;
        rep.reasons.push_back(std::string("NPreservesWViolated: ") + e.what());
    }

    rep.graded_polarizations_ok = true;
    for (long w : H.weight_levels()) {
        Subspace level = H.level_subspace(w);
        auto it = graded_polarizations.find(w);
        if (it == graded_polarizations.end()) {
            rep.graded_polarizations_ok = false;
            rep.reasons.push_back("missing graded polarization at weight " + std::to_string(w));
            continue;
        }
        // build the pure level piece in its own coordinates
        std::map<std::pair<long, long>, Subspace> level_pieces;
        size_t d = level.dim();
        for (const auto& [pq, s] : H.pieces()) {
            if (pq.first + pq.second != w || s.dim() == 0) continue;
            Matrix block(s.dim(), d);
            for (size_t r = 0; r < s.dim(); ++r) {
                auto coords = level.coordinates(s.basis_vector(r));
                for (size_t j = 0; j < d; ++j) block.at(r, j) = coords[j];
            }
            level_pieces[pq] = Subspace::span(block);
        }
        // conjugation in level coordinates: column r is the coordinate vector
        // of the conjugate of the r-th basis vector (semilinearity puts the
        // entry conjugation on the coefficients, not here)
        Matrix conj_level(d, d);
        for (size_t r = 0; r < d; ++r) {
            auto coords = level.coordinates(H.conjugate(level.basis_vector(r)));
            for (size_t i = 0; i < d; ++i) conj_level.at(i, r) = coords[i];
        }
        // restricted polarization
        Matrix Slevel(d, d);
        const Matrix& S = it->second;
        if (S.rows() != H.dim())
            throw dimension_error("graded polarization has the wrong ambient size");
        for (size_t a = 0; a < d; ++a)
            for (size_t b = 0; b < d; ++b)
                Slevel.at(a, b) = pair_with(S, level.basis_vector(a), level.basis_vector(b));
        try {
            SplitMHS pure = SplitMHS::make(d, level_pieces, conj_level);
            Polarization pol = Polarization::make(w, Slevel);
            auto rel = check_first_bilinear_relation(pure, pol);
            auto pos = check_positivity(pure, pol, NilpotentOp::make(Matrix::zero(d, d)));
            if (!rel.holds) {
                rep.graded_polarizations_ok = false;
                rep.reasons.push_back("first bilinear relation fails at weight " +
                                      std::to_string(w));
            }
            if (!(pos.orthogonal && pos.definite)) {
                rep.graded_polarizations_ok = false;
                rep.reasons.push_back("positivity fails at weight " + std::to_string(w));
            }
        } catch (const std::exception& e) {
            rep.graded_polarizations_ok = false;
            rep.reasons.push_back(std::string("graded check failed at weight ") +
                                  std::to_string(w) + ": " + e.what());
        }
    }
    rep.admissible = rep.n_preserves_w && rep.relative_filtration_exists &&
                     rep.graded_polarizations_ok;
    return rep;
}

} // namespace hodgecalc
