#pragma once

// Univariate polynomials over Q or Q(zeta_q).

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commalg/exactfield.hpp"
#include "commalg/linalg.hpp"

namespace commalg {

class Poly {
public:
    /// The zero polynomial.
    explicit Poly(FieldTag field = FieldTag::rational()) : field_(field) {}
    /// coeffs[i] is the coefficient of x^i; trailing zeros are trimmed.
    Poly(std::vector<Scalar> coeffs, FieldTag field);

    static Poly constant(const Scalar& c);
    static Poly x(FieldTag field = FieldTag::rational());
    static Poly monomial(const Scalar& c, std::size_t degree);
    static Poly from_rational(const RationalPoly& coeffs, FieldTag field = FieldTag::rational());
    static Poly from_ints(std::initializer_list<long long> coeffs);

    FieldTag field() const noexcept { return field_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Zero beyond the degree.
    Scalar coeff(std::size_t i) const;
    const Scalar& leading() const;
    bool is_monic() const;

    /// Divides by the leading coefficient; throws ZeroPolynomial on zero.
    Poly monic() const;
    /// p(-x).
    Poly reflect() const;
    Poly promote(int q) const;
    Scalar evaluate(const Scalar& at) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Scalar& s);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim();

    FieldTag field_;
    std::vector<Scalar> coeffs_;
};

Poly poly_pow(const Poly& p, unsigned e);

/// Quotient and remainder; throws ZeroPolynomial when dividing by zero.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
Poly poly_mod(const Poly& f, const Poly& g);
bool poly_divides(const Poly& d, const Poly& f);

struct XgcdResult {
    Poly d;
    Poly u;
    Poly v;
};

/// d = gcd(f, g) monic and u f + v g = d. Throws BothZero.
XgcdResult poly_xgcd(const Poly& f, const Poly& g);
Poly poly_gcd(const Poly& f, const Poly& g);

/// The unique h with h = residues[i] mod moduli[i] and deg h < sum of deg moduli[i].
/// Throws NotCoprimeError naming the first offending pair.
Poly poly_crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli);

/// f(-x) = (-1)^deg f * f(x) after normalizing f to be monic. Throws ZeroPolynomial.
bool is_balanced_poly(const Poly& f);

/// General, odd (exponents 1 mod 2) or q-class (exponents 1 mod q).
class CongruenceClass {
public:
    enum class Kind { General, Odd, QClass };

    static CongruenceClass general() { return CongruenceClass(Kind::General, 1); }
    static CongruenceClass odd() { return CongruenceClass(Kind::Odd, 2); }
    /// q = 1 normalizes to General and q = 2 to Odd. Throws BadOmega for q < 1.
    static CongruenceClass qclass(int q);

    Kind kind() const noexcept { return kind_; }
    /// Exponent step: 1, 2 or q.
    int modulus() const noexcept { return q_; }
    /// Whether x^e may carry a nonzero coefficient.
    bool allows(std::size_t exponent) const;

    bool operator==(const CongruenceClass&) const = default;

private:
    CongruenceClass(Kind kind, int q) : kind_(kind), q_(q) {}

    Kind kind_;
    int q_;
};

std::string to_string(CongruenceClass c);

std::optional<std::size_t> first_offending_exponent(const Poly& f, CongruenceClass c);
/// Returns f when every nonzero coefficient sits on an allowed exponent,
/// otherwise throws NotInClassError with the first offending exponent.
Poly restrict_to_class(const Poly& f, CongruenceClass c);

/// Horner evaluation f(A). Throws NotSquare or FieldMismatch.
Matrix eval_at_matrix(const Poly& f, const Matrix& a);

/// "c0 + c1*x + c2*x^2", zero coefficients omitted, "0" for the zero polynomial.
std::string to_string(const Poly& p);
/// Accepts the output of `to_string` plus "x", "x^k", "-x" and " - " between terms.
Poly parse_poly(std::string_view text, FieldTag field = FieldTag::rational());

}  // namespace commalg
