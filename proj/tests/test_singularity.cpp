#include <doctest.h>

#include "hodgecalc/singularity.hpp"

using namespace hodgecalc;

namespace {
const BPSingularity f34 = BPSingularity::make({3, 4});
const BPSingularity f23 = BPSingularity::make({2, 3});
const BPSingularity f22 = BPSingularity::make({2, 2});
} // namespace

TEST_CASE("milnor numbers") {
    CHECK(milnor_number(f34) == 6);
    CHECK(milnor_number(f22) == 1);
    CHECK(milnor_number(BPSingularity::make({2})) == 1);
    CHECK(milnor_number(BPSingularity::make({2, 3, 7})) == 12);
    CHECK_THROWS_AS(BPSingularity::make({1, 3}), dimension_error);
}

TEST_CASE("spectral numbers of the (3,4) cusp") {
    auto sp = spectrum(f34);
    REQUIRE(sp.size() == 6);
    std::vector<Rational> expect{Rational(7, 12),  Rational(10, 12), Rational(11, 12),
                                 Rational(13, 12), Rational(14, 12), Rational(17, 12)};
    for (size_t i = 0; i < 6; ++i) CHECK(sp[i].l == expect[i]);
    // basis order 1, y, x, y^2, xy, xy^2 in variables (x, y) = (v0, v1)
    CHECK(sp[0].monomial == std::vector<unsigned>{0, 0});
    CHECK(sp[1].monomial == std::vector<unsigned>{0, 1});
    CHECK(sp[2].monomial == std::vector<unsigned>{1, 0});
    CHECK(sp[3].monomial == std::vector<unsigned>{0, 2});
    CHECK(sp[4].monomial == std::vector<unsigned>{1, 1});
    CHECK(sp[5].monomial == std::vector<unsigned>{1, 2});
}

TEST_CASE("small spectra") {
    auto s23 = spectrum(f23);
    REQUIRE(s23.size() == 2);
    CHECK(s23[0].l == Rational(5, 6));
    CHECK(s23[1].l == Rational(7, 6));
    auto s22 = spectrum(f22);
    REQUIRE(s22.size() == 1);
    CHECK(s22[0].l == Rational(1));
}

TEST_CASE("spectrum symmetry l_i + l_{mu+1-i} = n + 1") {
    for (const auto& f : {BPSingularity::make({3, 4}), BPSingularity::make({2, 3, 7}),
                          BPSingularity::make({5, 5}), BPSingularity::make({2, 2, 2, 3}),
                          BPSingularity::make({6, 7})}) {
        auto sp = spectrum(f);
        Rational total(f.n() + 1);
        for (size_t i = 0; i < sp.size(); ++i) CHECK(sp[i].l + sp[sp.size() - 1 - i].l == total);
    }
}

TEST_CASE("bigrading of the (3,4) cusp") {
    OmegaF om = bigrading(f34);
    for (size_t i : {0u, 1u, 2u}) CHECK(om.types[i] == std::pair<long, long>{0, 1});
    for (size_t i : {3u, 4u, 5u}) CHECK(om.types[i] == std::pair<long, long>{1, 0});
}

TEST_CASE("bigrading at integer spectral numbers") {
    OmegaF om = bigrading(f22);
    REQUIRE(om.mu == 1);
    CHECK(om.types[0] == std::pair<long, long>{1, 1}); // weight 2 piece
    OmegaF om23 = bigrading(f23);
    CHECK(om23.types[0] == std::pair<long, long>{0, 1});
    CHECK(om23.types[1] == std::pair<long, long>{1, 0});
}

TEST_CASE("Hodge number symmetry") {
    for (const auto& f : {BPSingularity::make({3, 4}), BPSingularity::make({2, 3, 7}),
                          BPSingularity::make({4, 4}), BPSingularity::make({2, 2, 2})}) {
        OmegaF om = bigrading(f);
        std::map<std::pair<long, long>, size_t> h;
        for (const auto& t : om.types) h[t]++;
        for (auto [pq, cnt] : h) CHECK(h[{pq.second, pq.first}] == cnt);
    }
}

TEST_CASE("residue pairing") {
    OmegaF om = bigrading(f34);
    // res(1, xy^2) = 1, res(1,1) = 0
    CHECK(om.residue.at(0, 5) == Scalar(1));
    CHECK(om.residue.at(0, 0) == Scalar(0));
    // permutation Gram
    for (size_t i = 0; i < om.mu; ++i) {
        size_t nonzero = 0;
        for (size_t j = 0; j < om.mu; ++j)
            if (!om.residue.at(i, j).is_zero()) ++nonzero;
        CHECK(nonzero == 1);
    }
    CHECK(residue_pairing(f22).at(0, 0) == Scalar(1));
}

TEST_CASE("modified residue") {
    Matrix m = modified_residue(f34);
    CHECK(m.at(0, 5) == Scalar(-1)); // xy^2 sits in the (1,0) piece
    CHECK(m.at(1, 4) == Scalar(-1)); // res(y, xy) twisted by the same sign
    CHECK(modified_residue(f22).at(0, 0) == Scalar(-1));
    // antisymmetric on the pure odd-weight structure
    CHECK(m.transpose() == -m);
}

TEST_CASE("orthogonality of the modified residue across bigraded types") {
    for (const auto& f :
         {BPSingularity::make({3, 4}), BPSingularity::make({2, 3, 7}),
          BPSingularity::make({2, 2}), BPSingularity::make({4, 4})}) {
        OmegaF om = bigrading(f);
        long n = f.n();
        for (size_t i = 0; i < om.mu; ++i)
            for (size_t j = 0; j < om.mu; ++j) {
                if (om.modified.at(i, j).is_zero()) continue;
                long expected = (denominator(om.basis[i].l) == 1) ? n + 1 : n;
                CHECK(om.types[i].first + om.types[j].first == expected);
            }
    }
}

TEST_CASE("good basis: antidiagonal Gram and pairing involution") {
    for (const auto& f : {BPSingularity::make({3, 4}), BPSingularity::make({2, 3}),
                          BPSingularity::make({2, 2, 2}), BPSingularity::make({2, 3, 7}),
                          BPSingularity::make({2, 2})}) {
        auto rep = good_basis_check(f);
        CHECK(rep.ok);
    }
    auto rep34 = good_basis_check(f34);
    for (size_t i = 0; i < 6; ++i) CHECK(rep34.kappa[i] == 6 - i);
}

TEST_CASE("opposite filtrations") {
    CHECK(opposite_filtration_check(f34));
    CHECK(opposite_filtration_check(f23));
    CHECK(opposite_filtration_check(BPSingularity::make({2, 3, 7})));

    // artificially merged steps break oppositeness
    OmegaF om = bigrading(f34);
    FlagFiltration F = hodge_filtration_of(om);
    FlagFiltration spectral = spectral_filtration(om);
    std::vector<std::pair<Rational, Subspace>> merged;
    for (const auto& [idx, s] : spectral.steps())
        merged.emplace_back(Rational(idx + 1), s); // shift the spectral grading by one
    FlagFiltration U = FlagFiltration::from_steps(om.mu, false, merged);
    CHECK(!filtrations_opposite(F, U));
}

TEST_CASE("Riemann-Hodge relations") {
    for (const auto& f : {BPSingularity::make({3, 4}), BPSingularity::make({2, 2}),
                          BPSingularity::make({2, 3}), BPSingularity::make({2, 2, 2}),
                          BPSingularity::make({2, 3, 7})}) {
        auto rep = riemann_hodge_check(f);
        CHECK(rep.first_relation);
        CHECK(rep.orthogonal);
        CHECK(rep.definite);
        CHECK(rep.ok);
    }
    // the raw residue (no bigrading twist) is indefinite on the cusp
    OmegaF om = bigrading(f34);
    MHSPackage pkg = to_mhs(f34);
    Polarization raw{1, om.residue}; // not a valid polarization, probing only
    auto pos = check_positivity(pkg.structure, raw,
                                NilpotentOp::make(Matrix::zero(om.mu, om.mu)));
    CHECK(!pos.definite);
}

TEST_CASE("packaged structure") {
    MHSPackage pkg = to_mhs(f34);
    CHECK(pkg.structure.is_pure());
    CHECK(pkg.weights == std::vector<long>{1});
    auto& pieces = pkg.structure.pieces();
    CHECK(pieces.at({1, 0}).dim() == 3);
    CHECK(pieces.at({0, 1}).dim() == 3);

    MHSPackage node = to_mhs(f22);
    CHECK(node.weights == std::vector<long>{2});
    CHECK(node.structure.pieces().at({1, 1}).dim() == 1);

    MHSPackage big = to_mhs(BPSingularity::make({2, 3, 7}));
    CHECK(big.structure.dim() == 12);
    CHECK(riemann_hodge_check(BPSingularity::make({2, 3, 7})).ok);
}
