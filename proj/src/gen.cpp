#include "commalg/gen.hpp"

#include <cstdlib>
#include <iostream>

#include "commalg/canonical.hpp"
#include "commalg/commutant.hpp"
#include "commalg/rng.hpp"

namespace commalg {

namespace {

constexpr int kInvertibleAttempts = 64;

Matrix fill_random(Rng& rng, std::size_t rows, std::size_t cols, long long height) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_int(rng.uniform(-height, height), FieldTag::rational());
    return m;
}

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidSpec, msg); }

struct Generator {
    const GenSpec& spec;

    Matrix operator()(const NilpotentBlocks& p) const {
        std::vector<Matrix> blocks;
        std::size_t total = 0;
        for (auto s : p.sizes) {
            if (s == 0) invalid("nilpotent block sizes must be positive");
            blocks.push_back(jordan_block(s, Scalar(Rational(0))));
            total += s;
        }
        if (total != spec.size) invalid("nilpotent block sizes do not add up to size");
        return block_diag(blocks);
    }

    Matrix operator()(const CompanionProfile& p) const {
        if (p.poly.degree() < 1 || static_cast<std::size_t>(p.poly.degree()) != spec.size)
            invalid("companion polynomial degree must equal size");
        if (!p.poly.is_monic()) invalid("companion polynomial must be monic");
        return companion(p.poly);
    }

    Matrix operator()(const DiagRational& p) const {
        if (p.values.size() != spec.size) invalid("diagonal length must equal size");
        std::vector<Scalar> vals(p.values.begin(), p.values.end());
        return Matrix::diagonal(vals);
    }

    Matrix operator()(const BlockDiagProfile& p) const {
        std::vector<Matrix> blocks;
        std::size_t total = 0;
        for (const auto& part : p.parts) {
            blocks.push_back(generate(part));
            total += blocks.back().rows();
        }
        if (total != spec.size) invalid("block sizes do not add up to size");
        return block_diag(blocks);
    }

    Matrix operator()(const ConjugateBy& p) const {
        if (p.height < 1) invalid("conjugation height must be at least 1");
        if (!p.inner) invalid("conjugation needs an inner spec");
        const Matrix m = generate(*p.inner);
        if (m.rows() != spec.size) invalid("inner spec size differs from size");
        const Matrix pm = random_invertible_matrix(spec.seed, spec.size, p.height);
        Matrix out = inverse(pm) * m * pm;
        check_similar(m, out);
        return out;
    }

    // Invariant factors fix char poly, min poly and balancedness.
    static void check_similar(const Matrix& m, const Matrix& out) {
        bool ok = invariant_factors(m) == invariant_factors(out);
#if defined(COMMALG_CONSISTENCY_CHECKS) && !defined(NDEBUG)
        ok = ok && centralizer_basis(m).dim() == centralizer_basis(out).dim() &&
             clifforder_basis(m).dim() == clifforder_basis(out).dim();
#endif
        if (!ok) {
            std::cerr << "commalg: conjugated matrix is not similar to its source\n";
            std::abort();
        }
    }
};

}  // namespace

Matrix generate(const GenSpec& spec) { return std::visit(Generator{spec}, spec.profile); }

Matrix random_int_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols, long long height) {
    Rng rng(seed);
    return fill_random(rng, rows, cols, height);
}

Matrix random_invertible_matrix(std::uint64_t seed, std::size_t n, long long height) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kInvertibleAttempts; ++attempt) {
        Matrix p = fill_random(rng, n, n, height);
        if (!determinant(p).is_zero()) return p;
    }
    invalid("no invertible matrix found in " + std::to_string(kInvertibleAttempts) + " draws");
}

Poly random_odd_poly(std::uint64_t seed, std::size_t n, CongruenceClass cls, long long height) {
    Rng rng(seed);
    std::vector<Scalar> coeffs(std::max<std::size_t>(n, 2), Scalar(Rational(0)));
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (!cls.allows(e) || (e >= n && e != 1)) continue;
        coeffs[e] = Scalar::from_int(e == 1 ? rng.nonzero(-height, height) : rng.uniform(-height, height), FieldTag::rational());
    }
    return Poly(std::move(coeffs), FieldTag::rational());
}

}  // namespace commalg
