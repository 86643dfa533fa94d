#include <doctest.h>

#include "hodgecalc/quiver.hpp"

#include "support/rng.hpp"

using namespace hodgecalc;

namespace {
Matrix jordan_unipotent(size_t n) {
    Matrix T = Matrix::identity(n);
    for (size_t i = 0; i + 1 < n; ++i) T.at(i, i + 1) = Scalar(1);
    return T;
}
} // namespace

TEST_CASE("monodromy of a quiver") {
    DiskQuiver q = DiskQuiver::make(2, 2, Matrix::zero(2, 2), Matrix::identity(2));
    CHECK(monodromy(q) == Matrix::identity(2));

    Matrix T = jordan_unipotent(2);
    CHECK(monodromy(extend_shriek(T)) == T);
    CHECK(monodromy(extend_star(T)) == T);
}

TEST_CASE("invertibility check") {
    CHECK(check_invertibility(Matrix::zero(1, 1), Matrix::zero(1, 1)));
    CHECK(!check_invertibility(Matrix::identity(1), Matrix::identity(1)));
    Matrix half(1, 1);
    half.at(0, 0) = Scalar(Rational(1, 2));
    CHECK(check_invertibility(Matrix::identity(1), half));
}

TEST_CASE("monodromy-presentation functor") {
    SUBCASE("uv nilpotent keeps all of V0") {
        Matrix u = Matrix::identity(1);
        Matrix v = Matrix::zero(1, 1);
        auto img = beilinson_functor(u, v);
        CHECK(img.v0_nilpotent.dim() == 1);
        CHECK(img.phi == Matrix::identity(1));
    }
    SUBCASE("zero maps") {
        auto img = beilinson_functor(Matrix::zero(2, 0), Matrix::zero(0, 2));
        CHECK(img.v0_nilpotent.dim() == 2);
        CHECK(img.v1_nilpotent.dim() == 0);
        CHECK(img.phi == Matrix::zero(0, 0));
    }
    SUBCASE("invertibility hypothesis enforced") {
        CHECK_THROWS_AS(beilinson_functor(Matrix::identity(1), Matrix::identity(1)),
                        InvertibilityFailed);
    }
    SUBCASE("strict upper triangular example round-trips") {
        Matrix u = Matrix::identity(2);
        Matrix v(2, 2);
        v.at(0, 1) = Scalar(1);
        auto rt = beilinson_roundtrip(u, v);
        CHECK(rt.natural_iso);
    }
}

TEST_CASE("round-trip natural isomorphism on seeded diagrams") {
    test_rng rng(404);
    int done = 0;
    while (done < 200) {
        size_t d0 = rng.below(5), d1 = rng.below(5);
        Matrix u = rng.matrix(d0, d1, 2);
        Matrix v = rng.matrix(d1, d0, 2);
        if (!check_invertibility(u, v)) continue;
        auto rt = beilinson_roundtrip(u, v);
        CHECK(rt.natural_iso);
        ++done;
    }
}

TEST_CASE("the three extensions") {
    SUBCASE("constant sheaf has no vanishing part in the minimal extension") {
        Matrix T = Matrix::identity(3);
        DiskQuiver q = intermediate_extension(T);
        CHECK(q.phi_dim == 0);
    }
    SUBCASE("rank one vanishing space for a size-two block") {
        DiskQuiver q = intermediate_extension(jordan_unipotent(2));
        CHECK(q.phi_dim == 1);
        auto r = minimality_report(q);
        CHECK(r.minimal);
    }
    SUBCASE("no unipotent part: all three extensions agree up to isomorphism") {
        Matrix T = -Matrix::identity(2);
        DiskQuiver sh = extend_shriek(T);
        DiskQuiver st = extend_star(T);
        DiskQuiver ie = intermediate_extension(T);
        CHECK(ie.phi_dim == 2);
        CHECK(monodromy(sh) == T);
        CHECK(monodromy(st) == T);
        // c and v are isomorphisms in every one of them
        for (const auto& q : {sh, st, ie}) {
            CHECK(image(q.c).is_full());
            CHECK(kernel(q.v).is_zero());
            CHECK(q.v.is_invertible());
        }
    }
    SUBCASE("monodromy is recovered for mixed quasi-unipotent input") {
        // block diag(order-2 rotation, unipotent block)
        Matrix T(4, 4);
        T.at(0, 0) = Scalar(-1);
        T.at(1, 1) = Scalar(-1);
        T.at(2, 2) = Scalar(1);
        T.at(2, 3) = Scalar(1);
        T.at(3, 3) = Scalar(1);
        CHECK(monodromy(extend_shriek(T)) == T);
        CHECK(monodromy(extend_star(T)) == T);
        DiskQuiver ie = intermediate_extension(T);
        CHECK(ie.phi_dim == 3); // two rotation directions plus rank of N
        CHECK(minimality_report(ie).minimal);
    }
    SUBCASE("non-quasi-unipotent monodromy is refused") {
        Matrix T(1, 1);
        T.at(0, 0) = Scalar(2);
        CHECK_THROWS(extend_star(T));
    }
}

TEST_CASE("vanishing decomposition verdicts") {
    SUBCASE("minimal extension always satisfies it") {
        test_rng rng(7);
        for (int iter = 0; iter < 30; ++iter) {
            size_t n = 1 + rng.below(4);
            DiskQuiver q = intermediate_extension(rng.unipotent(n));
            auto d = vanishing_decomposition(q);
            CHECK(d.holds);
            CHECK(d.ker_v.is_zero());
            CHECK(d.im_c.is_full());
        }
    }
    SUBCASE("explicit rank-one quiver with c = v = 1") {
        DiskQuiver q = DiskQuiver::make(1, 1, Matrix::identity(1), Matrix::identity(1));
        auto d = vanishing_decomposition(q);
        CHECK(d.holds);
    }
    SUBCASE("the full direct-image quiver fails it whenever psi is nonzero") {
        // phi = L but im(c) + ker(v) = im(N): the extension does not split
        test_rng rng(8);
        for (int iter = 0; iter < 20; ++iter) {
            size_t n = 1 + rng.below(4);
            DiskQuiver q = extend_star(rng.unipotent(n));
            auto d = vanishing_decomposition(q);
            CHECK(!d.holds);
            CHECK(d.im_c.dim() < q.phi_dim);
        }
    }
}

TEST_CASE("duality") {
    test_rng rng(99);
    SUBCASE("dual of the extension by zero is the full direct image of the dual") {
        for (int iter = 0; iter < 20; ++iter) {
            size_t n = 1 + rng.below(4);
            Matrix T = rng.unipotent(n);
            DiskQuiver dsh = dual(extend_shriek(T));
            DiskQuiver st = extend_star(T.transpose());
            CHECK(dsh.c == st.c);
            CHECK(dsh.v == st.v);
        }
    }
    SUBCASE("dual of zero quiver") {
        DiskQuiver z = DiskQuiver::make(0, 0, Matrix::zero(0, 0), Matrix::zero(0, 0));
        DiskQuiver dz = dual(z);
        CHECK(dz.psi_dim == 0);
        CHECK(dz.phi_dim == 0);
    }
    SUBCASE("double dual is the identity on the nose") {
        for (int iter = 0; iter < 100; ++iter) {
            size_t p = rng.below(4), f = rng.below(4);
            DiskQuiver q = DiskQuiver::make(p, f, rng.matrix(f, p, 3), rng.matrix(p, f, 3));
            DiskQuiver dd = dual(dual(q));
            CHECK(dd.c == q.c);
            CHECK(dd.v == q.v);
        }
    }
}

TEST_CASE("comparison map kernel stabilizes at the nearby dimension") {
    test_rng rng(321);
    for (int iter = 0; iter < 15; ++iter) {
        size_t d = 1 + rng.below(4);
        Matrix T = rng.unipotent(d);
        Matrix N = T - Matrix::identity(d);
        size_t idx = 1;
        {
            Matrix pw = N;
            while (!pw.is_zero()) {
                pw = pw * N;
                ++idx;
            }
        }
        for (size_t n = idx; n <= idx + 2; ++n) {
            auto cmp = shriek_star_comparison(T, n);
            CHECK(cmp.kernel_dim == d);
            CHECK(cmp.cokernel_dim == d);
            // never injective on a nonzero unipotent system
            CHECK(!cmp.iso);
        }
    }
}

TEST_CASE("quiver morphism check and the canonical map") {
    test_rng rng(55);
    for (int iter = 0; iter < 20; ++iter) {
        size_t n = 1 + rng.below(4);
        Matrix T = rng.unipotent(n);
        Matrix N = T - Matrix::identity(n);
        DiskQuiver sh = extend_shriek(T);
        DiskQuiver st = extend_star(T);
        // the adjunction map is (id, N); its image is the minimal extension
        CHECK(is_quiver_morphism(sh, st, Matrix::identity(n), N));
        CHECK(image(N).dim() == intermediate_extension(T).phi_dim);
    }
}
