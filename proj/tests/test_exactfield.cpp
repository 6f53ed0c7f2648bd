#include <doctest.h>

#include <random>

#include "commalg/exactfield.hpp"
#include "oracle.hpp"

using namespace commalg;
using oracle::q;

namespace {

RationalPoly rp(std::initializer_list<long> c) {
    RationalPoly out;
    for (long v : c) out.emplace_back(v);
    return out;
}

Scalar cyc(int cond, std::initializer_list<long> c) {
    const RationalPoly coeffs = rp(c);
    return Scalar(cyclo_reduce(coeffs, cond));
}

Scalar random_cyclo(std::mt19937_64& rng, int cond) {
    std::uniform_int_distribution<long> d(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    RationalPoly c;
    for (int i = 0; i < cond; ++i) {
        Rational r(d(rng), den(rng));
        r.canonicalize();
        c.push_back(r);
    }
    return Scalar(cyclo_reduce(c, cond));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_phi(1) == rp({-1, 1}));
    CHECK(cyclotomic_phi(3) == rp({1, 1, 1}));
    CHECK(cyclotomic_phi(6) == rp({1, -1, 1}));
    CHECK(cyclotomic_phi(12) == rp({1, 0, -1, 0, 1}));
    for (int n = 1; n <= 30; ++n) CHECK(cyclotomic_phi(n).size() == static_cast<std::size_t>(euler_phi(n)) + 1);
}

TEST_CASE("cyclo_reduce canonical residues") {
    const RationalPoly z3 = rp({0, 0, 0, 1});
    CHECK(cyclo_reduce(z3, 6).coeffs() == rp({-1, 0}));
    const RationalPoly five = rp({5});
    CHECK(cyclo_reduce(five, 3).coeffs() == rp({5, 0}));
    const RationalPoly z_plus_z2 = rp({0, 1, 1});
    CHECK(cyclo_reduce(z_plus_z2, 3).coeffs() == rp({-1, 0}));
}

TEST_CASE("scalar inverse") {
    CHECK(scalar_inverse(q(3, 4)) == q(4, 3));
    CHECK(scalar_inverse(q(1)) == q(1));
    const Scalar z6 = cyc(6, {0, 1});
    CHECK(scalar_inverse(z6) == cyc(6, {1, -1}));
    CHECK(z6 * scalar_inverse(z6) == Scalar::one(FieldTag::cyclotomic(6)));
    CHECK_THROWS_AS(scalar_inverse(q(0)), Error);
    CHECK_THROWS_AS(scalar_inverse(Scalar::zero(FieldTag::cyclotomic(5))), Error);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int cond : {1, 2, 3, 4, 5, 7, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Scalar a = random_cyclo(rng, cond), b = random_cyclo(rng, cond), c = random_cyclo(rng, cond);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * scalar_inverse(a) == Scalar::one(a.field()));
        }
    }
}

TEST_CASE("roots of unity") {
    for (int cond = 1; cond <= 12; ++cond) {
        const FieldTag f = FieldTag::cyclotomic(cond);
        const Scalar z(zeta_power(cond, 1));
        Scalar p = Scalar::one(f);
        for (int k = 1; k < cond; ++k) {
            p *= z;
            CHECK_FALSE(p == Scalar::one(f));
        }
        p *= z;
        CHECK(p == Scalar::one(f));
        for (int j = 1; j < cond; ++j) {
            Scalar sum = Scalar::zero(f);
            for (int k = 0; k < cond; ++k) sum += Scalar(zeta_power(cond, static_cast<long long>(k) * j));
            CHECK(sum.is_zero());
        }
    }
    CHECK(Scalar(zeta_power(5, -1)) == Scalar(zeta_power(5, 4)));
}

TEST_CASE("mixed fields are rejected") {
    const Scalar a = q(1);
    const Scalar b = cyc(3, {0, 1});
    CHECK_THROWS_AS(a + b, Error);
    try {
        (void)(cyc(3, {1}) * cyc(4, {1}));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
    CHECK(a.promote(3) + b == cyc(3, {1, 1}));
}

TEST_CASE("text forms") {
    CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(to_string(q(-3, 2)) == "-3/2");
    CHECK(to_string(cyc(3, {1, 2})) == "[1, 2]");
    CHECK(parse_scalar("[1, 2]", FieldTag::cyclotomic(3)) == cyc(3, {1, 2}));
    CHECK(parse_scalar("1/2", FieldTag::cyclotomic(3)) == q(1, 2).promote(3));
}
