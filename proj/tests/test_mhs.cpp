#include <doctest.h>

#include "hodgecalc/mhs.hpp"
#include "hodgecalc/singularity.hpp"

#include "support/rng.hpp"

using namespace hodgecalc;

namespace {

SplitMHS one_dim_weight0() {
    std::map<std::pair<long, long>, Subspace> pieces;
    pieces[{0, 0}] = Subspace::full(1);
    return SplitMHS::make(1, pieces, Matrix::identity(1));
}

// Ex-6.7-shaped data with two monomials traded across the bigrading and a
// conjugation chosen so the result is still a valid split structure; paired
// against the true modified residue this violates the first relation.
SplitMHS traded_cusp_structure() {
    std::vector<std::vector<Scalar>> e(6, std::vector<Scalar>(6));
    for (size_t i = 0; i < 6; ++i) e[i][i] = Scalar(1);
    std::map<std::pair<long, long>, Subspace> pieces;
    pieces[{0, 1}] = Subspace::span(6, {e[0], e[2], e[3]});
    pieces[{1, 0}] = Subspace::span(6, {e[1], e[4], e[5]});
    Matrix conj = Matrix::zero(6, 6);
    size_t perm[6] = {5, 2, 1, 4, 3, 0};
    for (size_t i = 0; i < 6; ++i) conj.at(perm[i], i) = Scalar(1);
    return SplitMHS::make(6, pieces, conj);
}

} // namespace

TEST_CASE("split structure validation") {
    // overlapping pieces are rejected
    std::map<std::pair<long, long>, Subspace> bad;
    bad[{0, 0}] = Subspace::full(2);
    bad[{1, 1}] = Subspace::span(2, {{Scalar(1), Scalar(0)}});
    CHECK_THROWS_AS(SplitMHS::make(2, bad, Matrix::identity(2)), dimension_error);

    // conjugation must swap the bigrading
    std::map<std::pair<long, long>, Subspace> pieces;
    pieces[{1, 0}] = Subspace::span(2, {{Scalar(1), Scalar(0)}});
    pieces[{0, 1}] = Subspace::span(2, {{Scalar(0), Scalar(1)}});
    Matrix swap = Matrix::zero(2, 2);
    swap.at(0, 1) = Scalar(1);
    swap.at(1, 0) = Scalar(1);
    CHECK_NOTHROW(SplitMHS::make(2, pieces, swap));
    CHECK_THROWS_AS(SplitMHS::make(2, pieces, Matrix::identity(2)), dimension_error);
}

TEST_CASE("weight and Hodge filtrations from the bigrading") {
    MHSPackage pkg = to_mhs(BPSingularity::make({3, 4}));
    const SplitMHS& H = pkg.structure;
    FlagFiltration W = H.weight_filtration();
    FlagFiltration F = H.hodge_filtration();
    CHECK(W.at(Rational(0)).is_zero());
    CHECK(W.at(Rational(1)).is_full());
    CHECK(F.at(Rational(0)).is_full());
    CHECK(F.at(Rational(1)).dim() == 3);
    CHECK(F.at(Rational(2)).is_zero());

    // split identity: F^p cap W_k is spanned by pieces with p' >= p, p'+q' <= k
    for (long p = -1; p <= 2; ++p)
        for (long k = -1; k <= 2; ++k) {
            Subspace expected = Subspace::zero(H.dim());
            for (const auto& [pq, s] : H.pieces())
                if (pq.first >= p && pq.first + pq.second <= k) expected = sum(expected, s);
            CHECK(intersect(F.at(Rational(p)), W.at(Rational(k))) == expected);
        }
}

TEST_CASE("first bilinear relation") {
    SUBCASE("trivial one-dimensional structure") {
        Polarization S = Polarization::make(0, Matrix::identity(1));
        CHECK(check_first_bilinear_relation(one_dim_weight0(), S).holds);
    }
    SUBCASE("cusp structure with the modified residue") {
        MHSPackage pkg = to_mhs(BPSingularity::make({3, 4}));
        Polarization S = Polarization::make(1, pkg.pairing);
        CHECK(check_first_bilinear_relation(pkg.structure, S).holds);
    }
    SUBCASE("trading monomials across the bigrading breaks it") {
        MHSPackage pkg = to_mhs(BPSingularity::make({3, 4}));
        Polarization S = Polarization::make(1, pkg.pairing);
        auto rep = check_first_bilinear_relation(traded_cusp_structure(), S);
        CHECK(!rep.holds);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->first == std::pair<long, long>{1, 0});
    }
    SUBCASE("weight mismatch is refused") {
        Polarization S = Polarization::make(2, Matrix::identity(1));
        CHECK_THROWS_AS(check_first_bilinear_relation(one_dim_weight0(), S), WeightMismatch);
    }
    SUBCASE("invariant under base change") {
        test_rng rng(61);
        MHSPackage pkg = to_mhs(BPSingularity::make({2, 3}));
        for (int iter = 0; iter < 20; ++iter) {
            Matrix P = rng.invertible(2, 2);
            Matrix Pi = P.inverse();
            std::map<std::pair<long, long>, Subspace> pieces;
            for (const auto& [pq, s] : pkg.structure.pieces())
                pieces[pq] = Subspace::span(s.basis() * P.transpose());
            Matrix conj2 = P * pkg.structure.conj_matrix() * Pi.conj();
            SplitMHS H2 = SplitMHS::make(2, pieces, conj2);
            Matrix S2 = Pi.transpose() * pkg.pairing * Pi;
            CHECK(check_first_bilinear_relation(H2, Polarization::make(1, S2)).holds);
        }
    }
}

TEST_CASE("positivity") {
    SUBCASE("one-dimensional weight zero") {
        Polarization S = Polarization::make(0, Matrix::identity(1));
        auto rep = check_positivity(one_dim_weight0(), S,
                                    NilpotentOp::make(Matrix::zero(1, 1)));
        CHECK(rep.definite);
        CHECK(rep.orthogonal);
        CHECK(rep.blocks.size() == 1);
        CHECK(rep.blocks[0].positive);
    }
    SUBCASE("scaling behaviour of the verdict") {
        MHSPackage pkg = to_mhs(BPSingularity::make({3, 4}));
        NilpotentOp z = NilpotentOp::make(Matrix::zero(6, 6));
        for (long c : {3, -5}) {
            Polarization S{1, pkg.pairing * Scalar(c)};
            auto rep = check_positivity(pkg.structure, S, z);
            CHECK(rep.definite);
        }
    }
    SUBCASE("nilpotent must shift the bigrading") {
        MHSPackage pkg = to_mhs(BPSingularity::make({3, 4}));
        Matrix N = Matrix::zero(6, 6);
        N.at(0, 1) = Scalar(1); // moves within the same level: not adapted
        CHECK_THROWS_AS(
            check_positivity(pkg.structure, Polarization::make(1, pkg.pairing),
                             NilpotentOp::make(N)),
            FiltrationNotAdapted);
    }
}

TEST_CASE("Tate twist") {
    MHSPackage pkg = to_mhs(BPSingularity::make({3, 4}));
    SplitMHS H = pkg.structure;
    CHECK(H.tate_twist(0).pieces() == H.pieces());
    SplitMHS tw = H.tate_twist(1);
    CHECK(tw.weight_levels() == std::vector<long>{-1});
    CHECK(tw.pieces().count({-1, 0}) == 1);
    CHECK(tw.pieces().count({0, -1}) == 1);
    SplitMHS back = tw.tate_twist(-1);
    CHECK(back.pieces() == H.pieces());
}

TEST_CASE("admissibility") {
    SUBCASE("pure polarized structure with N = 0") {
        MHSPackage pkg = to_mhs(BPSingularity::make({3, 4}));
        auto rep = check_admissibility(pkg.structure, NilpotentOp::make(Matrix::zero(6, 6)),
                                       pkg.graded);
        CHECK(rep.admissible);
    }
    SUBCASE("node and space-curve structures") {
        for (const auto& f : {BPSingularity::make({2, 2}), BPSingularity::make({2, 3, 7})}) {
            MHSPackage pkg = to_mhs(f);
            size_t d = pkg.structure.dim();
            auto rep = check_admissibility(pkg.structure,
                                           NilpotentOp::make(Matrix::zero(d, d)), pkg.graded);
            CHECK(rep.admissible);
        }
    }
    SUBCASE("a W not preserved by N is flagged") {
        MHSPackage pkg = to_mhs(BPSingularity::make({2, 3}));
        Matrix N(2, 2);
        N.at(1, 0) = Scalar(1);
        FlagFiltration W = FlagFiltration::from_steps(
            2, true,
            {{Rational(0), Subspace::span(2, {{Scalar(1), Scalar(0)}})},
             {Rational(1), Subspace::full(2)}});
        auto rep = check_admissibility(W, pkg.structure, NilpotentOp::make(N), pkg.graded);
        CHECK(!rep.admissible);
        CHECK(!rep.n_preserves_w);
        REQUIRE(!rep.reasons.empty());
        CHECK(rep.reasons[0].find("NPreservesWViolated") != std::string::npos);
    }
}
