#include <doctest.h>

#include "witgen/field.hpp"

using namespace witgen;

TEST_CASE("rational canonical form and arithmetic") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK((Rational(7, 3) / Rational(7, 3)) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK(Rational(-5, 7) < Rational(1, 9));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
}

TEST_CASE("rational parse/str round trip") {
    for (const char* s : {"0", "5", "-3", "7/2", "-22/7"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
}

TEST_CASE("exact rational square roots") {
    CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
    CHECK(!Rational(2).exact_sqrt().has_value());
    CHECK(!Rational(-1).exact_sqrt().has_value());
    CHECK(Rational(0).exact_sqrt() == Rational(0));
}

TEST_CASE("square-free sqrt decomposition") {
    SqrtDecomposition d = decompose_sqrt(Rational(18));
    CHECK(d.radicand == 2);
    CHECK(d.scale == Rational(3));
    d = decompose_sqrt(Rational(9, 4));
    CHECK(d.radicand == 1);
    CHECK(d.scale == Rational(3, 2));
    d = decompose_sqrt(Rational(3, 4));
    CHECK(d.radicand == 3);
    CHECK(d.scale == Rational(1, 2));
    d = decompose_sqrt(Rational(-12));
    CHECK(d.radicand == -3);
    CHECK(d.scale == Rational(2));
}

TEST_CASE("quadratic extension arithmetic") {
    FieldElement x(Rational(1), Rational(1), BigInt(2));   // 1 + sqrt(2)
    FieldElement y(Rational(1), Rational(-1), BigInt(2));  // 1 - sqrt(2)
    CHECK(x * y == FieldElement(-1));
    CHECK(x + y == FieldElement(2));
    CHECK(x.conj() == y);
    CHECK(x * x.inverse() == FieldElement(1));
    CHECK((x - x).is_zero());
    CHECK((x - x).is_rational());  // b = 0 collapses the radicand
    // sqrt parts cancel in products back to Q
    FieldElement s(Rational(0), Rational(1), BigInt(5));
    CHECK(s * s == FieldElement(5));
    CHECK_THROWS_AS(x + s, Error);  // mixed radicands
}

TEST_CASE("field element parse/str") {
    for (const char* s : {"0", "-4", "3/2", "1+2*sqrt(3)", "1-2*sqrt(3)",
                          "-1/2+1/3*sqrt(-5)", "2*sqrt(7)"}) {
        FieldElement v = FieldElement::parse(s);
        CHECK(FieldElement::parse(v.str()) == v);
    }
    CHECK(FieldElement::parse("1+2*sqrt(3)").radicand() == 3);
    CHECK(FieldElement::parse("2*sqrt(7)").rational_part().is_zero());
    CHECK_THROWS_AS(FieldElement::parse("sqrt"), Error);
}

TEST_CASE("canonical ordering is total and reproducible") {
    FieldElement a(Rational(1, 2));
    FieldElement b(Rational(1), Rational(1), BigInt(2));
    CHECK(FieldElement::canonical_less(a, b));  // rationals first
    CHECK(!FieldElement::canonical_less(b, a));
    CHECK(!FieldElement::canonical_less(a, a));
    CHECK(FieldElement::canonical_less(FieldElement(-3), a));
}

TEST_CASE("merge_radicands") {
    CHECK(merge_radicands(BigInt(0), BigInt(5)) == 5);
    CHECK(merge_radicands(BigInt(5), BigInt(0)) == 5);
    CHECK(merge_radicands(BigInt(0), BigInt(0)) == 0);
    CHECK(merge_radicands(BigInt(5), BigInt(5)) == 5);
    CHECK_THROWS_AS(merge_radicands(BigInt(5), BigInt(3)), Error);
}

TEST_CASE("square roots inside an extension") {
    // rational square
    CHECK(exact_sqrt_in_extension(FieldElement(Rational(9, 4)), BigInt(0)) ==
          FieldElement(Rational(3, 2)));
    // not a square over Q
    CHECK(!exact_sqrt_in_extension(FieldElement(2), BigInt(0)).has_value());
    // 2 = (sqrt(2))^2 inside Q(sqrt(2))
    auto r = exact_sqrt_in_extension(FieldElement(2), BigInt(2));
    REQUIRE(r.has_value());
    CHECK(*r * *r == FieldElement(2));
    // 3 + 2*sqrt(2) = (1 + sqrt(2))^2
    FieldElement v(Rational(3), Rational(2), BigInt(2));
    auto s = exact_sqrt_in_extension(v, BigInt(2));
    REQUIRE(s.has_value());
    CHECK(*s * *s == v);
    // no sqrt of a negative-norm element without leaving the field
    CHECK(!exact_sqrt_in_extension(FieldElement(Rational(0), Rational(1), BigInt(2)), BigInt(2))
               .has_value());
}
