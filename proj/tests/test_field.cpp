#include <doctest.h>

#include "fpn/field.hpp"
#include "fpn/selftest.hpp"

using namespace fpn;

TEST_CASE("field spec parsing and printing") {
    CHECK(FieldSpec::parse("Q").kind == FieldKind::Rationals);
    CHECK(FieldSpec::parse("GF:2").p == 2);
    CHECK(FieldSpec::parse("GF:2147483629").p == 2147483629u); // largest prime below 2^31
    CHECK(FieldSpec::parse("GF:5").str() == "GF:5");
    CHECK(FieldSpec::rationals().str() == "Q");
    CHECK_THROWS_AS(FieldSpec::parse("GF:4"), InputError);    // not prime
    CHECK_THROWS_AS(FieldSpec::parse("GF:1"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("GF:2147483648"), InputError); // 2^31
    CHECK_THROWS_AS(FieldSpec::parse("R"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("GF:"), InputError);
}

TEST_CASE("scalar arithmetic over GF(5)") {
    const FieldSpec f = FieldSpec::prime(5);
    const Scalar two = Scalar::from_int(2, f);
    CHECK(two.inv() == Scalar::from_int(3, f)); // 2*3 = 6 = 1
    CHECK((two * two.inv()) == Scalar::one(f));
    CHECK(Scalar::from_int(-1, f) == Scalar::from_int(4, f));
    CHECK(Scalar::from_int(7, f).str() == "2");
    CHECK_THROWS_AS(Scalar::zero(f).inv(), DivisionByZeroError);
}

TEST_CASE("scalar arithmetic over the rationals") {
    const FieldSpec q = FieldSpec::rationals();
    const Scalar half = Scalar::parse("1/2", q);
    const Scalar third = Scalar::parse("1/3", q);
    CHECK((half + third).str() == "5/6");
    CHECK(Scalar::parse("3/4", q).inv().str() == "4/3");
    CHECK(Scalar::parse("-6/4", q).str() == "-3/2"); // canonicalized
    CHECK(Scalar::parse("4/2", q).str() == "2");
    CHECK_THROWS_AS(Scalar::parse("1/0", q), InputError);
    CHECK_THROWS_AS(Scalar::parse("1/-2", q), InputError); // denominator must be positive
    CHECK_THROWS_AS(Scalar::parse("", q), InputError);
    CHECK_THROWS_AS(Scalar::parse("x", q), InputError);
    CHECK_THROWS_AS(Scalar::zero(q).inv(), DivisionByZeroError);
}

TEST_CASE("fractions reduce into prime fields") {
    const FieldSpec f = FieldSpec::prime(5);
    CHECK(Scalar::parse("1/2", f) == Scalar::from_int(3, f));
    CHECK(Scalar::parse("-1", f) == Scalar::from_int(4, f));
    CHECK_THROWS_AS(Scalar::parse("1/5", f), InputError); // denominator divisible by p
}

TEST_CASE("mixed-field arithmetic is rejected") {
    const Scalar a = Scalar::one(FieldSpec::rationals());
    const Scalar b = Scalar::one(FieldSpec::prime(5));
    CHECK_THROWS_AS(a + b, InputError);
    CHECK_THROWS_AS(a * b, InputError);
}

TEST_CASE("Fermat property of prime-field inversion") {
    Rng rng(7);
    for (std::uint32_t p : {2u, 5u, 101u, 2147483629u}) {
        const FieldSpec f = FieldSpec::prime(p);
        for (int trial = 0; trial < 25; ++trial) {
            const Scalar a = Scalar::residue(1 + rng.below(p - 1), f);
            Scalar pow = Scalar::one(f); // a^(p-1) by square and multiply
            Scalar base = a;
            std::uint64_t e = p - 1;
            while (e) {
                if (e & 1) pow = pow * base;
                base = base * base;
                e >>= 1;
            }
            CHECK(pow == Scalar::one(f));
            CHECK(a * a.inv() == Scalar::one(f));
        }
    }
}

TEST_CASE("field axioms on random rationals") {
    Rng rng(11);
    const FieldSpec q = FieldSpec::rationals();
    for (int trial = 0; trial < 50; ++trial) {
        const long n1 = static_cast<long>(rng.below(21)) - 10;
        const long n2 = static_cast<long>(rng.below(21)) - 10;
        const long d1 = 1 + static_cast<long>(rng.below(9));
        const long d2 = 1 + static_cast<long>(rng.below(9));
        const Scalar a = Scalar::from_rational(Rational(n1, d1));
        const Scalar b = Scalar::from_rational(Rational(n2, d2));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + a.neg() == Scalar::zero(q));
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(q));
    }
}
