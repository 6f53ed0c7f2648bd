#include "commalg/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace commalg {

namespace {

void trim(RationalPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division of a by a nonzero b over Q.
std::pair<RationalPoly, RationalPoly> divmod(RationalPoly a, const RationalPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {{}, a};
    RationalPoly quot(a.size() - db);
    const Rational& lead = b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) continue;
        Rational c = a[k] / lead;
        quot[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    trim(quot);
    a.resize(db);
    trim(a);
    return {quot, a};
}

RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

RationalPoly sub(RationalPoly a, const RationalPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

namespace detail {

struct CycloField {
    int q;
    std::size_t degree;
    RationalPoly phi;  // monic, length degree + 1
};

const CycloField& cyclo_field(int q) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CycloField>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(q);
    if (it == cache.end()) {
        auto phi = cyclotomic_phi(q);
        auto field = std::make_unique<CycloField>(CycloField{q, phi.size() - 1, std::move(phi)});
        it = cache.emplace(q, std::move(field)).first;
    }
    return *it->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rational

Rational parse_rational(std::string_view text) {
    std::string_view s = strip(text);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw Error(ErrorKind::FieldError, "malformed rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::FieldError, "zero denominator in '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    if (!s.empty() && s.front() == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

// ---------------------------------------------------------------------------
// FieldTag

FieldTag FieldTag::cyclotomic(int q) {
    if (q < 1) throw Error(ErrorKind::FieldError, "cyclotomic conductor must be >= 1");
    return FieldTag{q};
}

std::string to_string(FieldTag tag) {
    return tag.is_rational() ? std::string("Q") : "Q(zeta_" + std::to_string(tag.conductor) + ")";
}

void require_same_field(FieldTag a, FieldTag b) {
    if (a != b) throw Error(ErrorKind::FieldMismatch, "field mismatch: " + to_string(a) + " vs " + to_string(b));
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

int euler_phi(int q) {
    int result = q;
    int m = q;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

RationalPoly cyclotomic_phi(int q) {
    if (q < 1) throw Error(ErrorKind::FieldError, "cyclotomic_phi needs q >= 1");
    RationalPoly p(static_cast<std::size_t>(q) + 1);
    p[0] = -1;
    p[q] = 1;
    for (int d = 1; d < q; ++d) {
        if (q % d != 0) continue;
        p = divmod(p, cyclotomic_phi(d)).first;
    }
    return p;
}

// ---------------------------------------------------------------------------
// CycloScalar

CycloScalar::CycloScalar(int q) : field_(&detail::cyclo_field(FieldTag::cyclotomic(q).conductor)) {
    coeffs_.assign(field_->degree, Rational(0));
}

int CycloScalar::conductor() const noexcept { return field_->q; }

bool CycloScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

CycloScalar cyclo_reduce(std::span<const Rational> coeffs, int q) {
    CycloScalar out(q);
    const auto& f = *out.field_;
    RationalPoly r(coeffs.begin(), coeffs.end());
    for (std::size_t k = r.size(); k-- > f.degree;) {
        if (r[k] == 0) continue;
        const Rational c = r[k];
        for (std::size_t i = 0; i <= f.degree; ++i) r[k - f.degree + i] -= c * f.phi[i];
    }
    for (std::size_t i = 0; i < f.degree && i < r.size(); ++i) out.coeffs_[i] = r[i];
    return out;
}

CycloScalar zeta_power(int q, long long k) {
    long long e = k % q;
    if (e < 0) e += q;
    RationalPoly mono(static_cast<std::size_t>(e) + 1);
    mono[e] = 1;
    return cyclo_reduce(mono, q);
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& rhs) {
    require_same_field(FieldTag{conductor()}, FieldTag{rhs.conductor()});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& rhs) {
    require_same_field(FieldTag{conductor()}, FieldTag{rhs.conductor()});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& rhs) {
    require_same_field(FieldTag{conductor()}, FieldTag{rhs.conductor()});
    const std::size_t d = coeffs_.size();
    RationalPoly prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    *this = cyclo_reduce(prod, conductor());
    return *this;
}

CycloScalar& CycloScalar::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of zero cyclotomic element");
    // Invariant: r_i = s_i * a (mod phi). Stops when r is a nonzero constant.
    RationalPoly r0 = field_->phi;
    RationalPoly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    RationalPoly s0;
    RationalPoly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [quot, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RationalPoly s2 = sub(s0, mul(quot, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because phi is irreducible.
    const Rational scale = 1 / r1[0];
    for (auto& c : s1) c *= scale;
    return cyclo_reduce(s1, conductor());
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(FieldTag field) {
    if (field.is_rational()) return Scalar(Rational(0));
    return Scalar(CycloScalar(field.conductor));
}

Scalar Scalar::one(FieldTag field) { return from_int(1, field); }

Scalar Scalar::from_int(long long value, FieldTag field) {
    return from_rational(Rational(static_cast<long>(value)), field);
}

Scalar Scalar::from_rational(const Rational& value, FieldTag field) {
    return Scalar(value).promote(field.is_rational() ? 0 : field.conductor);
}

FieldTag Scalar::field() const {
    if (const auto* c = std::get_if<CycloScalar>(&value_)) return FieldTag{c->conductor()};
    return FieldTag::rational();
}

bool Scalar::is_zero() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return *r == 0;
    return std::get<CycloScalar>(value_).is_zero();
}

Scalar Scalar::promote(int q) const {
    if (q == 0) {
        if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "cannot demote a cyclotomic scalar to Q");
        return *this;
    }
    if (const auto* c = std::get_if<CycloScalar>(&value_)) {
        if (c->conductor() != q) require_same_field(field(), FieldTag::cyclotomic(q));
        return *this;
    }
    const Rational& r = std::get<Rational>(value_);
    return Scalar(cyclo_reduce(std::span<const Rational>(&r, 1), q));
}

const Rational& Scalar::rational() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return *r;
    throw Error(ErrorKind::FieldMismatch, "expected a rational scalar");
}

const CycloScalar& Scalar::cyclo() const {
    if (const auto* c = std::get_if<CycloScalar>(&value_)) return *c;
    throw Error(ErrorKind::FieldMismatch, "expected a cyclotomic scalar");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (auto* r = std::get_if<Rational>(&value_); r && rhs.is_rational()) {
        *r += std::get<Rational>(rhs.value_);
        return *this;
    }
    require_same_field(field(), rhs.field());
    std::get<CycloScalar>(value_) += std::get<CycloScalar>(rhs.value_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (auto* r = std::get_if<Rational>(&value_); r && rhs.is_rational()) {
        *r -= std::get<Rational>(rhs.value_);
        return *this;
    }
    require_same_field(field(), rhs.field());
    std::get<CycloScalar>(value_) -= std::get<CycloScalar>(rhs.value_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (auto* r = std::get_if<Rational>(&value_); r && rhs.is_rational()) {
        *r *= std::get<Rational>(rhs.value_);
        return *this;
    }
    require_same_field(field(), rhs.field());
    std::get<CycloScalar>(value_) *= std::get<CycloScalar>(rhs.value_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (auto* r = std::get_if<Rational>(&value_); r && rhs.is_rational()) {
        const Rational& d = std::get<Rational>(rhs.value_);
        if (d == 0) throw Error(ErrorKind::ZeroInverse, "division by zero");
        *r /= d;
        return *this;
    }
    require_same_field(field(), rhs.field());
    std::get<CycloScalar>(value_) *= std::get<CycloScalar>(rhs.value_).inverse();
    return *this;
}

Scalar& Scalar::sub_mul(const Scalar& a, const Scalar& b) {
    auto* r = std::get_if<Rational>(&value_);
    if (r && a.is_rational() && b.is_rational()) {
        *r -= std::get<Rational>(a.value_) * std::get<Rational>(b.value_);
        return *this;
    }
    return *this -= a * b;
}

Scalar& Scalar::add_mul(const Scalar& a, const Scalar& b) {
    auto* r = std::get_if<Rational>(&value_);
    if (r && a.is_rational() && b.is_rational()) {
        *r += std::get<Rational>(a.value_) * std::get<Rational>(b.value_);
        return *this;
    }
    return *this += a * b;
}

Scalar Scalar::operator-() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return Scalar(Rational(-*r));
    return Scalar(-std::get<CycloScalar>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) return false;
    if (a.is_rational()) return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
    return std::get<CycloScalar>(a.value_) == std::get<CycloScalar>(b.value_);
}

Scalar scalar_inverse(const Scalar& s) {
    if (s.is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
    return Scalar::one(s.field()) / s;
}

Scalar power(const Scalar& base, unsigned long long e) {
    Scalar result = Scalar::one(base.field());
    Scalar b = base;
    while (e > 0) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e > 0) b *= b;
    }
    return result;
}

std::string to_string(const Scalar& s) {
    if (s.is_rational()) return to_string(s.rational());
    std::string out = "[";
    const auto& c = s.cyclo().coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(c[i]);
    }
    return out + "]";
}

Scalar parse_scalar(std::string_view text, FieldTag field) {
    std::string_view s = strip(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw Error(ErrorKind::FieldError, "unterminated cyclotomic literal");
        if (field.is_rational()) throw Error(ErrorKind::FieldError, "cyclotomic literal in a rational field");
        s = s.substr(1, s.size() - 2);
        RationalPoly coeffs;
        while (!strip(s).empty()) {
            const auto comma = s.find(',');
            coeffs.push_back(parse_rational(s.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
        return Scalar(cyclo_reduce(coeffs, field.conductor));
    }
    return Scalar::from_rational(parse_rational(s), field);
}

// ---------------------------------------------------------------------------

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NotInClass: return "NotInClass";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::DegreeZero: return "DegreeZero";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::BadExponent: return "BadExponent";
        case ErrorKind::BadOmega: return "BadOmega";
        case ErrorKind::BadDimensions: return "BadDimensions";
        case ErrorKind::PairInvariantViolated: return "PairInvariantViolated";
        case ErrorKind::NotNilpotent: return "NotNilpotent";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::FieldError: return "FieldError";
        case ErrorKind::RaggedRows: return "RaggedRows";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

}  // namespace commalg
