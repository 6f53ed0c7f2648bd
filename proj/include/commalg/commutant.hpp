#pragma once

// Commutant-type subspaces of M_n as kernels of vectorized operators.
//
// Under row-major vec, X -> AX is A kron I and X -> XA is I kron A^T, so
// {X : AX = mu XA} is the kernel of A kron I - mu (I kron A^T).

#include <cstdint>
#include <span>
#include <vector>

#include "commalg/linalg.hpp"

namespace commalg {

/// omega = zeta_q^k with gcd(k, q) = 1.
struct OmegaSpec {
    int q = 1;
    int k = 1;

    /// Throws BadOmega unless q >= 1 and gcd(k, q) = 1.
    OmegaSpec(int q_, int k_ = 1);

    FieldTag field() const { return FieldTag::cyclotomic(q); }
    Scalar omega() const;
};

/// A kron I - mu (I kron A^T).
Matrix twisted_operator(const Matrix& a, const Scalar& mu);
/// {X : AX = mu XA}; mu must live in A's field.
SubspaceBasis twisted_commutant(const Matrix& a, const Scalar& mu);

SubspaceBasis centralizer_basis(const Matrix& a);
SubspaceBasis clifforder_basis(const Matrix& a);
/// Rational A is promoted into Q(zeta_q); cyclotomic A must already have conductor q.
SubspaceBasis omega_centralizer_basis(const Matrix& a, const OmegaSpec& w);

/// Matrices commuting with every element of the centralizer, from the stacked
/// kernels of X_i kron I - I kron X_i^T.
SubspaceBasis double_centralizer_basis(const Matrix& a);

/// span{I, A, ..., A^{count-1}}.
SubspaceBasis power_span(const Matrix& a, std::size_t count);

/// K_n^(i): entry (r, r+i-1) equals (-1)^(r-1) in 1-based indexing. Throws IndexOutOfRange.
Matrix k_matrix(std::size_t n, std::size_t i, FieldTag field = FieldTag::rational());
/// a_1 K_n^(1) + ... + a_n K_n^(n).
Matrix k_combo(std::size_t n, std::span<const Scalar> a);

/// Exact criterion: the clifforder contains an invertible element iff A is
/// balanced. Builds with COMMALG_CONSISTENCY_CHECKS also run the random probe
/// against the answer and abort on disagreement.
bool clifforder_has_invertible(const Matrix& a);

/// Probe-only witness search, used as a cross-check of the exact criterion.
std::optional<Matrix> clifforder_invertible_witness(const Matrix& a, int trials = 200, std::uint64_t seed = 1);

}  // namespace commalg
