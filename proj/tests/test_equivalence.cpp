#include <doctest.h>

#include <random>

#include "commalg/canonical.hpp"
#include "commalg/commutant.hpp"
#include "commalg/equivalence.hpp"
#include "commalg/gen.hpp"
#include "oracle.hpp"

using namespace commalg;
using oracle::ints;
using oracle::jordan;
using oracle::q;

namespace {

Poly P(std::initializer_list<long long> c) { return Poly::from_ints(c); }

Matrix diag(std::vector<Scalar> v) { return Matrix::diagonal(v); }

Matrix pair5_a() { return block_diag({jordan(2, 1), ints({{-1, -1, 0}, {0, -1, -1}, {0, 0, -1}})}); }
Matrix pair5_b() { return block_diag({jordan(2, 2), ints({{-2, -1, 0}, {0, -2, -1}, {0, 0, -2}})}); }

// Reference polynomials: A = f(B), B = g(A).
Poly pair5_f() { return P({48, 32, -24, 8, 3}) * q(1, 128); }
Poly pair5_g() { return P({-3, 20, 6, -4, -3}) * q(1, 8); }

}  // namespace

TEST_CASE("express_in_powers examples") {
    const Matrix a = ints({{1, 2}, {3, 4}});
    CHECK(express_in_powers(a, a, CongruenceClass::general()) == P({0, 1}));
    CHECK_FALSE(express_in_powers(diag({q(2), q(3)}), Matrix::identity(2), CongruenceClass::general()).has_value());
    const auto f = express_in_powers(pair5_a(), pair5_b(), CongruenceClass::general());
    REQUIRE(f.has_value());
    CHECK(poly_mod(*f, min_poly(pair5_b())) == poly_mod(pair5_f(), min_poly(pair5_b())));
    CHECK_THROWS_AS(express_in_powers(a, Matrix::identity(3), CongruenceClass::general()), Error);
    CHECK_THROWS_AS(express_in_powers(a.promote(3), a, CongruenceClass::general()), Error);
}

TEST_CASE("five by five pair with reference certificate") {
    const Matrix a = pair5_a(), b = pair5_b();
    CHECK(verify_certificate(a, b, Certificate{pair5_g(), pair5_f(), CongruenceClass::general()}));
    const auto c = equivalence_certificate(a, b, CongruenceClass::general());
    REQUIRE(c.has_value());
    CHECK(verify_certificate(a, b, *c));
    CHECK(c->f.degree() <= 4);
    CHECK(c->g.degree() <= 4);
    Poly perturbed = pair5_g() + Poly::monomial(q(1, 1000), 2);
    CHECK_FALSE(verify_certificate(a, b, Certificate{perturbed, pair5_f(), CongruenceClass::general()}));
    CHECK(subspace_equal(centralizer_basis(a), centralizer_basis(b)));
    CHECK(subspace_equal(clifforder_basis(a), clifforder_basis(b)));
}

TEST_CASE("odd certificate for the 4x4 pair") {
    const Matrix a = block_diag({jordan(2, 1), ints({{-1}}), ints({{-1}})});
    const Matrix b = block_diag({jordan(2, 2), ints({{-2}}), ints({{-2}})});
    const Poly b_of_a = Poly({q(0), q(5, 2), q(0), q(-1, 2)}, FieldTag::rational());
    const Poly a_of_b = Poly({q(0), q(1, 4), q(0), q(1, 16)}, FieldTag::rational());
    CHECK(verify_certificate(a, b, Certificate{b_of_a, a_of_b, CongruenceClass::odd()}));
    const Poly b_gen = Poly({q(1, 2), q(2), q(-1, 2)}, FieldTag::rational());
    const Poly a_gen = Poly({q(-1, 2), q(1, 2), q(1, 8)}, FieldTag::rational());
    CHECK(verify_certificate(a, b, Certificate{b_gen, a_gen, CongruenceClass::general()}));
    CHECK_FALSE(verify_certificate(a, b, Certificate{b_gen, a_gen, CongruenceClass::odd()}));

    const auto c = equivalence_certificate(a, b, CongruenceClass::odd());
    REQUIRE(c.has_value());
    CHECK(c->f == b_of_a);
    CHECK(c->g == a_of_b);
    CHECK(subspace_equal(clifforder_basis(a), clifforder_basis(b)));
}

TEST_CASE("odd certificates may need exponents above n - 1") {
    const Matrix a = diag({q(1), q(2)}), b = diag({q(3), q(4)});
    const auto c = equivalence_certificate(a, b, CongruenceClass::odd());
    REQUIRE(c.has_value());
    CHECK(c->f == Poly({q(0), q(10, 3), q(0), q(-1, 3)}, FieldTag::rational()));
    CHECK(c->g == Poly({q(0), q(5, 42), q(0), q(1, 42)}, FieldTag::rational()));
    CHECK(verify_certificate(a, b, *c));
}

TEST_CASE("Jordan block and its polynomials") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const Matrix j = jordan(n, 0);
        const Matrix b = q(3) * Matrix::identity(n) + q(2) * j + j * j;
        CHECK(equivalence_certificate(j, b, CongruenceClass::general()).has_value());
        const Matrix c = q(3) * Matrix::identity(n) + j * j;
        CHECK_FALSE(equivalence_certificate(j, c, CongruenceClass::general()).has_value());
    }
}

TEST_CASE("clifforders equal but no certificate") {
    const Matrix a = diag({q(1), q(2, 3), q(1, 2)});
    const Matrix b = Matrix::identity(3);
    CHECK(clifforder_basis(a).dim() == 0);
    CHECK(clifforder_basis(b).dim() == 0);
    CHECK_FALSE(equivalence_certificate(a, b, CongruenceClass::general()).has_value());
    CHECK_FALSE(equivalence_certificate(a, b, CongruenceClass::odd()).has_value());
}

TEST_CASE("scalar affine maps are equivalences") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const Matrix a = oracle::random_matrix(rng, n);
        const long long s = 1 + static_cast<long long>(rng() % 4);
        const Matrix b = q(trial % 2 ? s : -s) * a + q(static_cast<long long>(rng() % 5) - 2) * Matrix::identity(n);
        const auto c = equivalence_certificate(a, b, CongruenceClass::general());
        REQUIRE(c.has_value());
        CHECK(verify_certificate(a, b, *c));
    }
}

TEST_CASE("centralizer equality iff general certificate") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const Matrix a = trial % 2 ? oracle::random_matrix(rng, n, 2) : jordan(n, 1);
        const Matrix b = trial % 3 == 0 ? oracle::random_matrix(rng, n, 2) : eval_at_matrix(random_odd_poly(rng(), n, CongruenceClass::general()), a);
        const bool equal = subspace_equal(centralizer_basis(a), centralizer_basis(b));
        const auto c = equivalence_certificate(a, b, CongruenceClass::general());
        CHECK(equal == c.has_value());
        if (c) CHECK(verify_certificate(a, b, *c));
    }
}

TEST_CASE("balanced matrices: equal clifforders iff odd certificate") {
    std::mt19937_64 rng(63);
    int positives = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 4;
        std::vector<std::size_t> sizes;
        for (std::size_t left = n; left > 0;) {
            const std::size_t s = 1 + rng() % left;
            sizes.push_back(s);
            left -= s;
        }
        const GenSpec nil{rng(), n, NilpotentBlocks{sizes}};
        const Matrix a = generate(GenSpec{rng(), n, ConjugateBy{2, std::make_shared<const GenSpec>(nil)}});
        const Poly f = random_odd_poly(rng(), n, trial % 2 ? CongruenceClass::odd() : CongruenceClass::general());
        const Matrix b = eval_at_matrix(f, a);
        REQUIRE(is_balanced_matrix(a));
        if (!is_balanced_matrix(b)) continue;
        const bool equal = subspace_equal(clifforder_basis(a), clifforder_basis(b));
        const auto c = equivalence_certificate(a, b, CongruenceClass::odd());
        CHECK(equal == c.has_value());
        positives += c ? 1 : 0;
    }
    CHECK(positives > 0);
    // Balanced invertible case.
    const Matrix a = block_diag({jordan(2, 1), -jordan(2, 1)});
    const Matrix b = q(3) * a - a * a * a;
    CHECK(subspace_equal(clifforder_basis(a), clifforder_basis(b)) ==
          equivalence_certificate(a, b, CongruenceClass::odd()).has_value());
}

TEST_CASE("blockwise certificates glue by CRT") {
    // A = diag(A1, A2) with coprime characteristic polynomials; B = diag(f1(A1), f2(A2)).
    const Matrix a1 = jordan(2, 1), a2 = jordan(2, -2);
    const Poly f1 = P({1, 2}), f2 = P({0, 0, 1});
    const Matrix a = block_diag({a1, a2});
    const Matrix b = block_diag({eval_at_matrix(f1, a1), eval_at_matrix(f2, a2)});
    const Poly glued = poly_crt({f1, f2}, {char_poly(a1), char_poly(a2)});
    CHECK(eval_at_matrix(glued, a) == b);
    const auto found = express_in_powers(b, a, CongruenceClass::general());
    REQUIRE(found.has_value());
    CHECK(poly_mod(*found, min_poly(a)) == poly_mod(glued, min_poly(a)));
}

TEST_CASE("balanced pair with odd reference certificate") {
    const Matrix a = block_diag({ints({{1, 12}, {0, 1}}), ints({{-1, -3}, {0, -1}})});
    const Matrix b = block_diag({ints({{2, 4}, {0, 2}}), ints({{-2, -1}, {0, -2}})});
    const Poly a_of_b = P({0, -12, 0, 5}) * q(1, 16);
    const Poly b_of_a = P({0, 17, 0, -5}) * q(1, 6);
    REQUIRE(is_balanced_matrix(a));
    REQUIRE(is_balanced_matrix(b));
    CHECK(verify_certificate(a, b, Certificate{b_of_a, a_of_b, CongruenceClass::odd()}));
    const auto c = equivalence_certificate(a, b, CongruenceClass::odd());
    REQUIRE(c.has_value());
    CHECK(verify_certificate(a, b, *c));
    CHECK(subspace_equal(clifforder_basis(a), clifforder_basis(b)));
}
