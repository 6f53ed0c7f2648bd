#pragma once

// Quasi-commuting pairs AB = omega BA over Q(zeta_q).

#include <optional>

#include "commalg/commutant.hpp"
#include "commalg/equivalence.hpp"
#include "commalg/linalg.hpp"

namespace commalg {

struct QuasiPair {
    Matrix a;
    Matrix b;
    OmegaSpec omega;
};

/// Exact test of AB - omega BA = O; rational inputs are promoted.
bool omega_commutes(const Matrix& a, const Matrix& b, const OmegaSpec& w);

/// (sA + tB)^q == s^q A^q + t^q B^q. Throws PairInvariantViolated when AB != omega BA.
bool potter_check(const QuasiPair& pair, const Scalar& s, const Scalar& t);

/// blockdiag of (diag(1, omega, ..., omega^{q-1}), cyclic shift e_i -> e_{i+1}).
/// Throws BadDimensions unless q | n.
QuasiPair weyl_pair(int q, std::size_t n, int k = 1);

struct OmegaEquivalenceReport {
    bool commutants_equal = false;
    std::optional<Certificate> certificate;
    /// Both sides true or both false.
    bool agree = false;
};

/// Compares C_omega(A) = C_omega(B) with q-polynomial equivalence. A must be
/// nilpotent (NotNilpotent otherwise).
OmegaEquivalenceReport omega_equivalence_check(const Matrix& a, const Matrix& b, const OmegaSpec& w);

/// Rational matrices are promoted into Q(zeta_q); cyclotomic ones must match q.
Matrix into_cyclotomic(const Matrix& m, int q);

}  // namespace commalg
