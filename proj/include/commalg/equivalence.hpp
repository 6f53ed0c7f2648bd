#pragma once

// Polynomial, odd and q-polynomial equivalence with explicit certificates.

#include <optional>
#include <vector>

#include "commalg/linalg.hpp"
#include "commalg/polyring.hpp"

namespace commalg {

/// B = f(A) and A = g(B), both polynomials inside `cls`.
struct Certificate {
    Poly f;
    Poly g;
    CongruenceClass cls = CongruenceClass::general();
};

/// Exponents searched when expressing an n x n matrix: 0..n-1 for General,
/// 1, 1+q, ..., 1+q(n-1) otherwise.
std::vector<std::size_t> allowed_exponents(std::size_t n, CongruenceClass cls);

/// Solves vec(B) = sum_j c_j vec(A^j) over the allowed exponents. Free
/// variables are set to zero, so the answer is canonical and uses the lowest
/// exponents possible. Throws ShapeMismatch or FieldMismatch.
std::optional<Poly> express_in_powers(const Matrix& b, const Matrix& a, CongruenceClass cls);

/// Both directions of `express_in_powers`; nullopt when either fails.
std::optional<Certificate> equivalence_certificate(const Matrix& a, const Matrix& b, CongruenceClass cls);

/// f(A) = B, g(B) = A and both polynomials lie in the certificate's class.
bool verify_certificate(const Matrix& a, const Matrix& b, const Certificate& c);

}  // namespace commalg
