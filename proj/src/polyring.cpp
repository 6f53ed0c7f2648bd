#include "commalg/polyring.hpp"

#include <algorithm>
#include <cctype>

namespace commalg {

Poly::Poly(std::vector<Scalar> coeffs, FieldTag field) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_field(field_, c.field());
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly({c}, c.field()); }

Poly Poly::x(FieldTag field) { return Poly({Scalar::zero(field), Scalar::one(field)}, field); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.field()));
    coeffs[degree] = c;
    return Poly(std::move(coeffs), c.field());
}

Poly Poly::from_rational(const RationalPoly& coeffs, FieldTag field) {
    std::vector<Scalar> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(Scalar::from_rational(c, field));
    return Poly(std::move(out), field);
}

Poly Poly::from_ints(std::initializer_list<long long> coeffs) {
    std::vector<Scalar> out;
    for (long long c : coeffs) out.push_back(Scalar::from_int(c, FieldTag::rational()));
    return Poly(std::move(out), FieldTag::rational());
}

Scalar Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_); }

const Scalar& Poly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Scalar::one(field_); }

Poly Poly::monic() const {
    const Scalar inv = scalar_inverse(leading());
    Poly out = *this;
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

Poly Poly::reflect() const {
    Poly out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

Poly Poly::promote(int q) const {
    Poly out(q == 0 ? FieldTag::rational() : FieldTag::cyclotomic(q));
    for (const auto& c : coeffs_) out.coeffs_.push_back(c.promote(q));
    return out;
}

Scalar Poly::evaluate(const Scalar& at) const {
    require_same_field(field_, at.field());
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            if (!rhs.coeffs_[j].is_zero()) out[i + j].add_mul(coeffs_[i], rhs.coeffs_[j]);
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
    require_same_field(field_, s.field());
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly poly_pow(const Poly& p, unsigned e) {
    Poly result = Poly::constant(Scalar::one(p.field()));
    Poly base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    require_same_field(f.field(), g.field());
    const FieldTag field = f.field();
    std::vector<Scalar> rem = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    if (rem.size() <= dg) return {Poly(field), f};
    const Scalar inv_lead = scalar_inverse(gc.back());
    std::vector<Scalar> quot(rem.size() - dg, Scalar::zero(field));
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k].is_zero()) continue;
        const Scalar c = rem[k] * inv_lead;
        const std::size_t shift = k - dg;
        for (std::size_t i = 0; i <= dg; ++i)
            if (!gc[i].is_zero()) rem[shift + i].sub_mul(c, gc[i]);
        quot[shift] = c;
    }
    rem.resize(dg, Scalar::zero(field));
    return {Poly(std::move(quot), field), Poly(std::move(rem), field)};
}

Poly poly_mod(const Poly& f, const Poly& g) { return poly_divmod(f, g).second; }

bool poly_divides(const Poly& d, const Poly& f) { return poly_mod(f, d).is_zero(); }

XgcdResult poly_xgcd(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
    const FieldTag field = f.field();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(Scalar::one(field)), s1(field);
    Poly t0(field), t1 = Poly::constant(Scalar::one(field));
    while (!r1.is_zero()) {
        auto [quo, rem] = poly_divmod(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, s0 - quo * s1);
        t0 = std::exchange(t1, t0 - quo * t1);
    }
    const Scalar inv = scalar_inverse(r0.leading());
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly poly_gcd(const Poly& f, const Poly& g) { return poly_xgcd(f, g).d; }

Poly poly_crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
    if (residues.size() != moduli.size() || moduli.empty())
        throw Error(ErrorKind::ShapeMismatch, "poly_crt needs one residue per modulus");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (poly_gcd(moduli[i], moduli[j]).degree() != 0)
                throw NotCoprimeError(i, j, "moduli " + std::to_string(i) + " and " + std::to_string(j) +
                                                " are not coprime");
    Poly h = poly_mod(residues[0], moduli[0]);
    Poly m = moduli[0];
    for (std::size_t i = 1; i < moduli.size(); ++i) {
        // h + m * t with t = (r_i - h) * m^{-1} mod m_i
        const Poly m_inv = poly_xgcd(m, moduli[i]).u;
        const Poly t = poly_mod((residues[i] - h) * m_inv, moduli[i]);
        h += m * t;
        m *= moduli[i];
        h = poly_mod(h, m);
    }
    return h;
}

bool is_balanced_poly(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "balancedness of the zero polynomial");
    const Poly g = f.monic();
    const Poly flipped = g.degree() % 2 == 0 ? g.reflect() : -g.reflect();
    return flipped == g;
}

CongruenceClass CongruenceClass::qclass(int q) {
    if (q < 1) throw Error(ErrorKind::BadOmega, "congruence class modulus must be at least 1");
    if (q == 1) return general();
    if (q == 2) return odd();
    return CongruenceClass(Kind::QClass, q);
}

bool CongruenceClass::allows(std::size_t exponent) const {
    return kind_ == Kind::General || exponent % static_cast<std::size_t>(q_) == 1;
}

std::string to_string(CongruenceClass c) {
    switch (c.kind()) {
    case CongruenceClass::Kind::General: return "general";
    case CongruenceClass::Kind::Odd: return "odd";
    case CongruenceClass::Kind::QClass: return "q:" + std::to_string(c.modulus());
    }
    return {};
}

std::optional<std::size_t> first_offending_exponent(const Poly& f, CongruenceClass c) {
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (!f.coeffs()[i].is_zero() && !c.allows(i)) return i;
    return std::nullopt;
}

Poly restrict_to_class(const Poly& f, CongruenceClass c) {
    if (auto e = first_offending_exponent(f, c))
        throw NotInClassError(*e, "exponent " + std::to_string(*e) + " is not allowed in class " + to_string(c));
    return f;
}

Matrix eval_at_matrix(const Poly& f, const Matrix& a) {
    require_square(a);
    require_same_field(f.field(), a.field());
    const std::size_t n = a.rows();
    Matrix acc(n, n, a.field());
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
    }
    return acc;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Scalar& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += to_string(c);
        if (i == 1) out += "*x";
        if (i > 1) out += "*x^" + std::to_string(i);
    }
    return out;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_poly(std::string_view text) {
    throw Error(ErrorKind::FieldError, "malformed polynomial term '" + std::string(text) + "'");
}

// "c", "c*x", "c*x^k", "x", "x^k", with an optional leading '-'.
std::pair<Scalar, std::size_t> parse_term(std::string_view term, FieldTag field) {
    term = strip(term);
    bool negate = false;
    std::string_view coef_text;
    std::string_view power_text;
    const auto x_pos = term.rfind('x');
    if (x_pos == std::string_view::npos) {
        coef_text = term;
    } else {
        power_text = strip(term.substr(x_pos + 1));
        std::string_view head = strip(term.substr(0, x_pos));
        if (!head.empty() && head.back() == '*') {
            coef_text = strip(head.substr(0, head.size() - 1));
            if (coef_text.empty()) bad_poly(term);
        } else if (head.empty() || head == "+") {
            coef_text = "1";
        } else if (head == "-") {
            coef_text = "1";
            negate = true;
        } else {
            bad_poly(term);
        }
    }
    std::size_t power = 0;
    if (x_pos != std::string_view::npos) {
        power = 1;
        if (!power_text.empty()) {
            if (power_text.front() != '^') bad_poly(term);
            power_text = strip(power_text.substr(1));
            if (power_text.empty() || !std::all_of(power_text.begin(), power_text.end(),
                                                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                bad_poly(term);
            power = std::stoul(std::string(power_text));
        }
    }
    Scalar c = parse_scalar(coef_text, field);
    return {negate ? -c : c, power};
}

}  // namespace

Poly parse_poly(std::string_view text, FieldTag field) {
    text = strip(text);
    if (text.empty()) bad_poly(text);
    std::vector<std::string_view> terms;
    int depth = 0;
    std::size_t start = 0;
    bool seen_content = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (depth == 0 && (ch == '+' || ch == '-') && seen_content) {
            // A sign directly after '*', '^' or '/' belongs to the current term.
            std::size_t k = i;
            while (k > start && std::isspace(static_cast<unsigned char>(text[k - 1]))) --k;
            const char prev = k > start ? text[k - 1] : '+';
            if (prev != '*' && prev != '^' && prev != '/' && prev != '+' && prev != '-') {
                terms.push_back(text.substr(start, i - start));
                start = ch == '+' ? i + 1 : i;
                seen_content = false;
                continue;
            }
        }
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '+' && ch != '-') seen_content = true;
    }
    terms.push_back(text.substr(start));
    Poly out(field);
    for (auto t : terms) {
        auto [c, power] = parse_term(t, field);
        out += Poly::monomial(c, power);
    }
    return out;
}

}  // namespace commalg
