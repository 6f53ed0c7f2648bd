#pragma once

// Exact scalars: rationals and elements of the cyclotomic field Q(zeta_q).
//
// A cyclotomic element is stored as its unique residue modulo the q-th
// cyclotomic polynomial, so equality is coefficient comparison. Values of
// different fields never mix implicitly; Q embeds into Q(zeta_q) only through
// `Scalar::promote`.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "commalg/error.hpp"

namespace commalg {

using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign, surrounding blanks ignored).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Which field a scalar lives in. conductor 0 means Q, q >= 1 means Q(zeta_q).
struct FieldTag {
    int conductor = 0;

    static constexpr FieldTag rational() { return FieldTag{0}; }
    static FieldTag cyclotomic(int q);

    constexpr bool is_rational() const { return conductor == 0; }
    bool operator==(const FieldTag&) const = default;
};

std::string to_string(FieldTag tag);

/// Dense polynomial over Q, index i holds the coefficient of x^i, no trailing zeros.
using RationalPoly = std::vector<Rational>;

/// Euler's totient, i.e. deg Phi_q.
int euler_phi(int q);

/// The q-th cyclotomic polynomial, obtained by dividing x^q - 1 by Phi_d for
/// every proper divisor d of q.
RationalPoly cyclotomic_phi(int q);

namespace detail {
struct CycloField;
}

class CycloScalar {
public:
    /// The zero element of Q(zeta_q).
    explicit CycloScalar(int q);

    int conductor() const noexcept;
    /// Length is always deg Phi_q.
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// Inverse through the extended Euclidean algorithm against Phi_q.
    CycloScalar inverse() const;

    CycloScalar& operator+=(const CycloScalar& rhs);
    CycloScalar& operator-=(const CycloScalar& rhs);
    CycloScalar& operator*=(const CycloScalar& rhs);
    CycloScalar& operator*=(const Rational& rhs);
    CycloScalar operator-() const;

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);

private:
    friend CycloScalar cyclo_reduce(std::span<const Rational> coeffs, int q);

    const detail::CycloField* field_;
    std::vector<Rational> coeffs_;
};

/// Reads `coeffs` as sum coeffs[i] * zeta_q^i and reduces it mod Phi_q.
CycloScalar cyclo_reduce(std::span<const Rational> coeffs, int q);

/// zeta_q^k for any integer k (negative exponents wrap modulo q).
CycloScalar zeta_power(int q, long long k);

/// A field element tagged with its field.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Scalar(CycloScalar c) : value_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

    static Scalar zero(FieldTag field);
    static Scalar one(FieldTag field);
    static Scalar from_int(long long value, FieldTag field);
    static Scalar from_rational(const Rational& value, FieldTag field);

    FieldTag field() const;
    bool is_zero() const;
    bool is_rational() const { return std::holds_alternative<Rational>(value_); }

    /// Embeds a rational into Q(zeta_q); identity when already in that field.
    Scalar promote(int q) const;

    const Rational& rational() const;
    const CycloScalar& cyclo() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    /// *this -= a * b, without a temporary in the rational case.
    Scalar& sub_mul(const Scalar& a, const Scalar& b);
    /// *this += a * b.
    Scalar& add_mul(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    std::variant<Rational, CycloScalar> value_;
};

/// Multiplicative inverse; throws ZeroInverse on zero.
Scalar scalar_inverse(const Scalar& s);

/// x^e by repeated squaring (e >= 0).
Scalar power(const Scalar& base, unsigned long long e);

/// "p/q" for rationals, "[a0, a1, ...]" for cyclotomic elements.
std::string to_string(const Scalar& s);

/// Inverse of `to_string`: a bracketed list is a cyclotomic element of `field`,
/// anything else a rational (promoted into `field` when needed).
Scalar parse_scalar(std::string_view text, FieldTag field);

void require_same_field(FieldTag a, FieldTag b);

}  // namespace commalg
