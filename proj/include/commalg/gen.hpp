#pragma once

// Seeded generators for structured test matrices.

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "commalg/linalg.hpp"
#include "commalg/polyring.hpp"

namespace commalg {

struct GenSpec;

struct NilpotentBlocks {
    std::vector<std::size_t> sizes;
};

struct CompanionProfile {
    Poly poly;
};

struct DiagRational {
    std::vector<Rational> values;
};

struct BlockDiagProfile {
    std::vector<GenSpec> parts;
};

/// P^{-1} M P with M generated from `inner` and P an integer matrix of height <= height.
struct ConjugateBy {
    long long height = 3;
    std::shared_ptr<const GenSpec> inner;
};

using GenProfile = std::variant<NilpotentBlocks, CompanionProfile, DiagRational, BlockDiagProfile, ConjugateBy>;

struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t size = 0;
    GenProfile profile;
};

/// Deterministic in the spec. Throws InvalidSpec when sizes disagree, a height
/// is below 1, or no invertible P turns up in 64 draws.
Matrix generate(const GenSpec& spec);

/// Coefficients in [-height, height] on the allowed exponents below `n`
/// (1, 1+q, ...; 0..n-1 for General), with a nonzero coefficient on x.
Poly random_odd_poly(std::uint64_t seed, std::size_t n, CongruenceClass cls, long long height = 3);

/// Entries in [-height, height].
Matrix random_int_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols, long long height = 3);
/// Resamples until the determinant is nonzero.
Matrix random_invertible_matrix(std::uint64_t seed, std::size_t n, long long height = 3);

}  // namespace commalg
