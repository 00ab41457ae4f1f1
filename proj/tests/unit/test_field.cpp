#include "doctest.h"
#include "specdata/field.hpp"

using namespace specdata;

TEST_CASE("rational arithmetic is exact and canonical") {
    const Rational a(2, 4);
    CHECK(a.to_string() == "1/2");
    CHECK(Rational(-3, -6).to_string() == "1/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");

    const Rational x(7, 3), y(-5, 11);
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK(Rational::from_string("14/6") == Rational(7, 3));
    CHECK(Rational::from_string("-4") == Rational(-4));
    CHECK_THROWS_AS(Rational::from_string("1/0"), BadInputError);
    CHECK_THROWS_AS(Rational::from_string("abc"), BadInputError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), BadInputError);
}

TEST_CASE("prime field arithmetic") {
    const Fp a = Fp::make(3, 7), b = Fp::make(5, 7);
    CHECK((a + b).residue() == 1);
    CHECK((a - b).residue() == 5);
    CHECK((a * b).residue() == 1);
    CHECK((a / b).residue() == 2);  // 3 * 5^{-1} = 3 * 3 = 2 mod 7
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);

    // Bare literals adopt the modulus of the first attached operand.
    CHECK(Fp(10) + a == Fp::make(6, 7));
    CHECK(Fp(-1) * b == Fp::make(2, 7));
    CHECK(Fp(10) == Fp(10));
    CHECK_THROWS_AS(Fp::make(1, 7) + Fp::make(1, 11), BadInputError);
    CHECK_THROWS_AS(field_inverse(Fp::make(0, 7)), BadInputError);
}

TEST_CASE("division by small integers respects the characteristic") {
    CHECK(div_by_small_int(Rational(5), 2) == Rational(5, 2));
    CHECK(div_by_small_int(Fp::make(6, 7), 2) == Fp::make(3, 7));
    // p = 5 <= i = 5: the division the Newton conversion needs is impossible.
    CHECK_THROWS_AS(div_by_small_int(Fp::make(1, 5), 5), BadInputError);
}

TEST_CASE("field descriptors parse and validate") {
    CHECK(FieldDesc::parse("Q").rational);
    const FieldDesc f = FieldDesc::parse("Fp:11");
    CHECK(!f.rational);
    CHECK(f.p == 11);
    CHECK(f.to_string() == "Fp:11");
    CHECK_THROWS_AS(FieldDesc::parse("Fp:9"), BadInputError);
    CHECK_THROWS_AS(FieldDesc::parse("R"), BadInputError);
    CHECK(parse_scalar<Rational>("3/9", FieldDesc::Q()) == Rational(1, 3));
    CHECK(parse_scalar<Fp>("-1", f) == Fp::make(10, 11));
    CHECK_THROWS_AS(parse_scalar<Fp>("x", f), BadInputError);
}
