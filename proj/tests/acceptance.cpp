// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "commalg/adpower.hpp"
#include "commalg/canonical.hpp"
#include "commalg/commutant.hpp"
#include "commalg/equivalence.hpp"
#include "commalg/gen.hpp"
#include "commalg/potter.hpp"
#include "oracle.hpp"

using namespace commalg;
using oracle::ints;
using oracle::jordan;
using oracle::q;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure and keeps counting.
class Tally {
public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && first_failure_.empty()) first_failure_ = what;
        if (!ok) ++failures_;
    }
    bool ok() const { return failures_ == 0; }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream s;
        s << summary << "; " << checks_ << " checks";
        if (!ok()) s << ", " << failures_ << " failed, first: " << first_failure_;
        return {ok(), s.str()};
    }

private:
    int checks_ = 0;
    int failures_ = 0;
    std::string first_failure_;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::shared_ptr<const GenSpec> share(GenSpec s) { return std::make_shared<const GenSpec>(std::move(s)); }

Matrix pair5_a() { return block_diag({jordan(2, 1), ints({{-1, -1, 0}, {0, -1, -1}, {0, 0, -1}})}); }
Matrix pair5_b() { return block_diag({jordan(2, 2), ints({{-2, -1, 0}, {0, -2, -1}, {0, 0, -2}})}); }

// A rational sample of size n: random integer entries, or a conjugated matrix with
// repeated eigenvalues so that derogatory cases show up.
Matrix sample_matrix(std::uint64_t seed, std::size_t n) {
    switch (seed % 3) {
        case 0:
            return random_int_matrix(seed, n, n, 2);
        case 1: {
            std::vector<Rational> vals;
            for (std::size_t i = 0; i < n; ++i) vals.emplace_back(static_cast<long>((seed / 3 + i) % 3) - 1);
            return generate(GenSpec{seed, n, ConjugateBy{2, share(GenSpec{seed, n, DiagRational{vals}})}});
        }
        default: {
            std::vector<std::size_t> sizes{(n + 1) / 2};
            if (n / 2 > 0) sizes.push_back(n / 2);
            const GenSpec nil{seed, n, NilpotentBlocks{sizes}};
            const Matrix m = generate(GenSpec{seed, n, ConjugateBy{2, share(nil)}});
            return m + q(static_cast<long long>(seed % 5) - 2) * Matrix::identity(n);
        }
    }
}

Outcome criterion_example_pair() {
    Tally t;
    const auto t0 = Clock::now();
    const Matrix a = pair5_a(), b = pair5_b();
    const Poly f = Poly::from_ints({48, 32, -24, 8, 3}) * q(1, 128);
    const Poly g = Poly::from_ints({-3, 20, 6, -4, -3}) * q(1, 8);
    t.require(eval_at_matrix(f, b) == a, "f(B) = A");
    t.require(eval_at_matrix(g, a) == b, "g(A) = B");
    // Certificate fields are oriented as B = f(A), A = g(B).
    t.require(verify_certificate(a, b, Certificate{g, f, CongruenceClass::general()}), "reference certificate");
    const auto c = equivalence_certificate(a, b, CongruenceClass::general());
    t.require(c.has_value(), "certificate found");
    if (c) t.require(verify_certificate(a, b, *c), "found certificate verifies");
    const double secs = seconds_since(t0);
    t.require(secs < 1.0, "runtime under 1 s");
    std::ostringstream s;
    s << "5x5 pair, " << secs << " s";
    return t.outcome(s.str());
}

Outcome criterion_jordan_clifforder() {
    Tally t;
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto cl = clifforder_basis(jordan(n, 0));
        std::vector<Matrix> ks;
        for (std::size_t i = 1; i <= n; ++i) ks.push_back(k_matrix(n, i));
        const std::string tag = "n = " + std::to_string(n);
        t.require(cl.dim() == n, tag + " dim");
        t.require(subspace_equal(cl, subspace_from_matrices(ks, n)), tag + " span");
    }
    return t.outcome("n = 1..8");
}

Outcome criterion_centralizer_equivalence() {
    Tally t;
    const auto t0 = Clock::now();
    int equal = 0, negatives_equal = 0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        const std::uint64_t seed = 3000 + trial;
        const std::size_t n = 1 + trial % 6;
        const Matrix a = sample_matrix(seed, n);
        const Matrix b = eval_at_matrix(random_odd_poly(seed, n, CongruenceClass::general(), 3), a);
        const bool same = subspace_equal(centralizer_basis(a), centralizer_basis(b));
        const auto c = equivalence_certificate(a, b, CongruenceClass::general());
        t.require(same == c.has_value(), "positive trial " + std::to_string(trial));
        if (c) t.require(verify_certificate(a, b, *c), "certificate of trial " + std::to_string(trial));
        equal += same ? 1 : 0;
    }
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const Matrix a = sample_matrix(5000 + trial, n), b = sample_matrix(6000 + trial, n);
        const bool same = subspace_equal(centralizer_basis(a), centralizer_basis(b));
        const bool cert = equivalence_certificate(a, b, CongruenceClass::general()).has_value();
        t.require(same == cert, "negative trial " + std::to_string(trial));
        negatives_equal += same ? 1 : 0;
    }
    const double secs = seconds_since(t0);
    t.require(secs < 60.0, "runtime under 60 s");
    std::ostringstream s;
    s << "200 B = f(A) trials (" << equal << " equivalent), 50 independent pairs (" << negatives_equal
      << " equivalent), " << secs << " s";
    return t.outcome(s.str());
}

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

Outcome criterion_balanced_invertible() {
    Tally t;
    std::vector<std::pair<std::string, Matrix>> curated;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> cur;
        partitions(n, n, cur, parts);
        for (const auto& p : parts) {
            std::string name = "nilpotent(";
            for (auto s : p) name += std::to_string(s) + ",";
            name.back() = ')';
            const GenSpec nil{n, n, NilpotentBlocks{p}};
            curated.emplace_back(name, generate(GenSpec{100 + n, n, ConjugateBy{2, share(nil)}}));
        }
    }
    for (long long a : {1, 2}) {
        curated.emplace_back("diag(J3(" + std::to_string(a) + "), -J4)", block_diag({jordan(3, a), -jordan(4, a)}));
        curated.emplace_back("diag(J3(" + std::to_string(a) + "), -J3)", block_diag({jordan(3, a), -jordan(3, a)}));
    }
    curated.emplace_back("diag(1, 2)", ints({{1, 0}, {0, 2}}));
    curated.emplace_back("diag(1, -1, 0)", ints({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
    curated.emplace_back("companion(x^2 + 1)", companion(Poly::from_ints({1, 0, 1})));
    curated.emplace_back("companion(x^2 + x + 1)", companion(Poly::from_ints({1, 1, 1})));
    curated.emplace_back("diag(J2(1), -J2(1), 3)", block_diag({jordan(2, 1), -jordan(2, 1), ints({{3}})}));
    curated.emplace_back("diag(J2(1), -J1(1))", block_diag({jordan(2, 1), -jordan(1, 1)}));
    curated.emplace_back("double cover", double_cover(random_int_matrix(7, 3, 3, 2)));

    int positives = 0, negatives = 0;
    for (std::size_t i = 0; i < curated.size(); ++i) {
        const auto& [name, a] = curated[i];
        const bool balanced = is_balanced_matrix(a);
        const bool witnessed = clifforder_invertible_witness(a, 200, 11 + i).has_value();
        t.require(balanced == witnessed, name);
        t.require(balanced == clifforder_has_invertible(a), name + " criterion");
        (balanced ? positives : negatives) += 1;
    }
    std::ostringstream s;
    s << curated.size() << " matrices, " << positives << " balanced, " << negatives << " unbalanced";
    t.require(curated.size() >= 30, "curated set size");
    return t.outcome(s.str());
}

Outcome criterion_double_centralizer() {
    Tally t;
    int derogatory = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 5;
        const Matrix a = sample_matrix(7000 + i, n);
        const auto deg = static_cast<std::size_t>(min_poly(a).degree());
        derogatory += deg < n ? 1 : 0;
        t.require(subspace_equal(double_centralizer_basis(a), power_span(a, deg)), "sample " + std::to_string(i));
    }
    return t.outcome("100 matrices, " + std::to_string(derogatory) + " with deg m < n");
}

// The Kronecker operator must match the matrix built column by column from
// AE_ij - mu E_ij A, and the computed basis must satisfy the relation directly.
void check_relation(Tally& t, const Matrix& a, const Scalar& mu, const SubspaceBasis& computed, const std::string& tag) {
    const std::size_t n = a.rows();
    const Matrix direct = oracle::direct_relation_operator(a, mu);
    t.require(twisted_operator(a, mu) == direct, tag + " operator");
    t.require(computed.dim() == n * n - rank(direct), tag + " dimension");
    for (const auto& x : computed.basis()) t.require((a * x - mu * (x * a)).is_zero(), tag + " relation");
    std::vector<Matrix> from_direct;
    for (const auto& v : kernel_basis(direct)) from_direct.push_back(unvec(v, n));
    t.require(subspace_equal(computed, subspace_from_matrices(from_direct, n, a.field())), tag + " subspace");
}

Outcome criterion_kronecker() {
    Tally t;
    const OmegaSpec w(3, 1);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 5;
        const Matrix a = sample_matrix(8000 + i, n);
        const std::string tag = "sample " + std::to_string(i);
        check_relation(t, a, q(1), centralizer_basis(a), tag + " mu = 1");
        check_relation(t, a, q(-1), clifforder_basis(a), tag + " mu = -1");
        check_relation(t, a.promote(3), w.omega(), omega_centralizer_basis(a, w), tag + " mu = omega");
    }
    return t.outcome("100 matrices, mu in {1, -1, zeta_3}");
}

Outcome criterion_potter() {
    Tally t;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    for (int qq = 2; qq <= 7; ++qq) {
        const auto p = weyl_pair(qq, static_cast<std::size_t>(qq));
        const auto p2 = weyl_pair(qq, static_cast<std::size_t>(2 * qq), qq - 1);
        for (int i = 0; i < 20; ++i) {
            const Scalar s = q(num(rng), den(rng)), u = q(num(rng), den(rng));
            const std::string tag = "q = " + std::to_string(qq) + " sample " + std::to_string(i);
            t.require(potter_check(p, s, u), tag);
            t.require(potter_check(p2, s, u), tag + " (2q, k = q - 1)");
        }
    }
    const double secs = seconds_since(t0);
    t.require(secs < 30.0, "runtime under 30 s");
    std::ostringstream s;
    s << "q = 2..7, 20 (s, t) each, " << secs << " s";
    return t.outcome(s.str());
}

Outcome criterion_q_equivalence() {
    Tally t;
    const Matrix a = jordan(5, 0);
    const OmegaSpec w(3, 1);
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (int i = 0; i < 10; ++i) {
        int bn = 0;
        while (bn == 0) bn = num(rng);
        const Scalar b = q(bn, den(rng)), c = q(num(rng), den(rng));
        const Matrix m = b * a + c * a.pow(4);
        const auto r = omega_equivalence_check(a, m, w);
        const std::string tag = "b = " + to_string(b) + ", c = " + to_string(c);
        t.require(r.commutants_equal, tag + " commutants");
        t.require(r.certificate.has_value(), tag + " certificate");
        if (r.certificate) t.require(verify_certificate(a.promote(3), m.promote(3), *r.certificate), tag + " verify");
    }
    const auto sq = omega_equivalence_check(a, a * a, w);
    t.require(!sq.commutants_equal, "A^2 commutants differ");
    t.require(!sq.certificate.has_value(), "A^2 has no certificate");
    return t.outcome("J_5(0), q = 3, 10 random (b, c), plus B = A^2");
}

Outcome criterion_odd_goldens() {
    Tally t;
    const Matrix a = block_diag({jordan(2, 1), ints({{-1}}), ints({{-1}})});
    const Matrix b = block_diag({jordan(2, 2), ints({{-2}}), ints({{-2}})});
    const Poly b_of_a = Poly({q(0), q(5, 2), q(0), q(-1, 2)}, FieldTag::rational());
    const Poly a_of_b = Poly({q(0), q(1, 4), q(0), q(1, 16)}, FieldTag::rational());
    t.require(verify_certificate(a, b, Certificate{b_of_a, a_of_b, CongruenceClass::odd()}), "reference odd certificate");
    const auto c = equivalence_certificate(a, b, CongruenceClass::odd());
    t.require(c.has_value(), "odd certificate found");
    t.require(subspace_equal(clifforder_basis(a), clifforder_basis(b)), "4x4 clifforders equal");

    const Matrix d = Matrix::diagonal(std::vector<Scalar>{q(1), q(2, 3), q(1, 2)});
    const Matrix id = Matrix::identity(3);
    t.require(clifforder_basis(d).dim() == 0 && clifforder_basis(id).dim() == 0, "counterexample clifforders are zero");
    t.require(!equivalence_certificate(d, id, CongruenceClass::odd()).has_value(), "counterexample not odd-equivalent");
    t.require(!equivalence_certificate(d, id, CongruenceClass::general()).has_value(), "counterexample not equivalent");
    return t.outcome("4x4 pair and diag(1, 2/3, 1/2) vs I_3");
}

Outcome criterion_ad_power() {
    Tally t;
    for (std::uint64_t i = 0; i < 30; ++i) {
        const std::size_t n = 1 + i % 4;
        const Matrix a = sample_matrix(9000 + i, n);
        const std::string tag = "sample " + std::to_string(i);
        t.require(subspace_equal(ad_power_kernel(a, 1), centralizer_basis(a)), tag + " k = 1");
        for (int k = 2; k <= 4; ++k)
            t.require(subspace_includes(ad_power_kernel(a, k), ad_power_kernel(a, k - 1)), tag + " monotone");
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 4;
        const Matrix a = sample_matrix(9500 + i, n);
        const Poly f = random_odd_poly(9500 + i, n + 1, CongruenceClass::general(), 3);
        const int k = 1 + static_cast<int>(i % 4);
        t.require(ad_inclusion_check(a, f, k), "triple " + std::to_string(i));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        const Matrix a = jordan(n, 0);
        const Matrix d = alternating_weight_matrix(n);
        const std::string tag = "J_" + std::to_string(n);
        if (n >= 2) t.require(a * d + d * a == -k_matrix(n, 2), tag + " AD + DA = -K2");
        for (int k : {2, 3}) {
            t.require(anticommutator_power(a, d, k).is_zero(), tag + " sum vanishes");
            // B -> sum binom(k, i) D^{k-i} B D^i scales entry (s, t) by (d_s + d_t)^k, never zero,
            // so only B = O is annihilated.
            Matrix op(n * n, n * n);
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t u = 0; u < n; ++u) {
                    const Matrix img = anticommutator_power(d, unit_matrix(n, s, u), k);
                    const Matrix col = vec(img);
                    for (std::size_t r = 0; r < n * n; ++r) op(r, s * n + u) = col(r, 0);
                    t.require(img(s, u) == power(d(s, s) + d(u, u), static_cast<unsigned>(k)), tag + " entry weight");
                }
            t.require(rank(op) == n * n, tag + " only B = O");
        }
    }
    return t.outcome("30 kernel samples, 100 inclusion triples, J_n for n <= 5");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"example pair golden certificate", criterion_example_pair},
        {"clifforder of J_n(0) is spanned by K_n", criterion_jordan_clifforder},
        {"equal centralizers iff two-sided certificate", criterion_centralizer_equivalence},
        {"balanced iff clifforder has an invertible element", criterion_balanced_invertible},
        {"double centralizer is the polynomial algebra", criterion_double_centralizer},
        {"Kronecker operators match direct relations", criterion_kronecker},
        {"Potter identity on Weyl pairs", criterion_potter},
        {"omega equivalence for J_5(0)", criterion_q_equivalence},
        {"odd equivalence goldens", criterion_odd_goldens},
        {"Ad-power kernels", criterion_ad_power},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
                  << o.detail << "] (" << seconds_since(t0) << " s)" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
