#pragma once

// Characteristic and minimal polynomials, invariant factors and the balanced
// classification. Nothing here extracts eigenvalues.

#include <utility>
#include <vector>

#include "commalg/linalg.hpp"
#include "commalg/polyring.hpp"

namespace commalg {

/// det(xI - A) by fraction-free elimination over F[x].
Poly char_poly(const Matrix& a);

/// First linear dependence among vec(I), vec(A), vec(A^2), ...
Poly min_poly(const Matrix& a);

/// Smith normal form of xI - A over F[x]: n monic entries, each dividing the
/// next, leading 1s included.
std::vector<Poly> invariant_factors(const Matrix& a);

bool is_balanced_matrix(const Matrix& a);
bool is_nilpotent(const Matrix& a);

/// Subdiagonal 1s and last column -a_0, ..., -a_{n-1}. Throws NotMonic, DegreeZero.
Matrix companion(const Poly& f);

/// Factor of m_A carrying every eigenvalue whose negative is also an
/// eigenvalue (zero included), at full multiplicity.
Poly balanced_factor(const Poly& min_poly);

struct BalancedSplit {
    Matrix essential;  // E = A P
    Matrix radical;    // Br = A (I - P)
    Matrix projector;  // P, the Bezout idempotent
};

/// A = E + Br with E supported on the balanced spectrum of A.
BalancedSplit balanced_split(const Matrix& a);

/// blockdiag(A, -A).
Matrix double_cover(const Matrix& a);

struct StructureReport {
    Poly char_poly;
    Poly min_poly;
    std::vector<Poly> invariant_factors;
    bool is_balanced = false;
    bool is_nilpotent = false;
    bool min_equals_char = false;
};

StructureReport structure_report(const Matrix& a);

}  // namespace commalg
