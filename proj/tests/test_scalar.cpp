#include <doctest.h>

#include "hodgecalc/scalar.hpp"

using namespace hodgecalc;

TEST_CASE("exact field arithmetic in Q(i)") {
    Scalar a(Rational(1, 3), Rational(2, 5));
    Scalar b(Rational(-2), Rational(1, 7));
    CHECK(a + b == Scalar(Rational(-5, 3), Rational(19, 35)));
    CHECK(a * b - b * a == Scalar(0));
    CHECK((a / b) * b == a);
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
}

TEST_CASE("conjugation fixes rationals and negates the i-part") {
    Scalar r(Rational(7, 2));
    CHECK(r.conj() == r);
    Scalar z(Rational(1), Rational(-3));
    CHECK(z.conj() == Scalar(Rational(1), Rational(3)));
}

TEST_CASE("powers of i") {
    CHECK(Scalar::i().pow(4) == Scalar(1));
    CHECK(Scalar::i().pow(-1) == -Scalar::i());
    CHECK(Scalar::i().pow(-2) == Scalar(-1));
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "-3", "5/7", "-12/5", "1+1*i", "0-1*i", "2/3-4/9*i", "-1/2+3*i"}) {
        Scalar v = Scalar::parse(s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    CHECK(Scalar::parse("1+1*i") == Scalar(Rational(1), Rational(1)));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-2/3*i") == Scalar(Rational(0), Rational(-2, 3)));
    CHECK_THROWS_AS(Scalar::parse("0.5"), parse_error);
    CHECK_THROWS_AS(Scalar::parse(""), parse_error);
}
