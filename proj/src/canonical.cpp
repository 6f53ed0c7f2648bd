#include "commalg/canonical.hpp"

#include <algorithm>

namespace commalg {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix characteristic_matrix(const Matrix& a) {
    const std::size_t n = a.rows();
    const FieldTag field = a.field();
    PolyMatrix m(n, std::vector<Poly>(n, Poly(field)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = Poly::constant(-a(i, j));
            if (i == j) m[i][j] += Poly::x(field);
        }
    return m;
}

Poly exact_quotient(const Poly& f, const Poly& g) { return poly_divmod(f, g).first; }

}  // namespace

Poly char_poly(const Matrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    const FieldTag field = a.field();
    if (n == 0) return Poly::constant(Scalar::one(field));
    PolyMatrix m = characteristic_matrix(a);
    bool negate = false;
    Poly prev = Poly::constant(Scalar::one(field));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Poly(field);
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly(field);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

Poly min_poly(const Matrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    const FieldTag field = a.field();
    struct Row {
        std::size_t pivot;
        std::vector<Scalar> v;
        std::vector<Scalar> combo;
    };
    std::vector<Row> rows;
    Matrix power = Matrix::identity(n, field);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Scalar> v = power.entries();
        std::vector<Scalar> combo(k + 1, Scalar::zero(field));
        combo[k] = Scalar::one(field);
        for (const auto& r : rows) {
            const Scalar c = v[r.pivot];
            if (c.is_zero()) continue;
            for (std::size_t i = r.pivot; i < v.size(); ++i)
                if (!r.v[i].is_zero()) v[i].sub_mul(c, r.v[i]);
            for (std::size_t i = 0; i < r.combo.size(); ++i)
                if (!r.combo[i].is_zero()) combo[i].sub_mul(c, r.combo[i]);
        }
        const auto nz = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (nz == v.end()) return Poly(std::move(combo), field);
        const Scalar inv = scalar_inverse(*nz);
        for (auto& s : v) s *= inv;
        for (auto& s : combo) s *= inv;
        rows.push_back({static_cast<std::size_t>(nz - v.begin()), std::move(v), std::move(combo)});
        power = power * a;
    }
    throw Error(ErrorKind::ShapeMismatch, "minimal polynomial search exceeded degree n");
}

std::vector<Poly> invariant_factors(const Matrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    const FieldTag field = a.field();
    PolyMatrix m = characteristic_matrix(a);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot of minimal degree, ties to the lowest row then column.
            std::size_t pr = n, pc = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!m[i][j].is_zero() && (pr == n || m[i][j].degree() < m[pr][pc].degree())) {
                        pr = i;
                        pc = j;
                    }
            if (pr == n) break;  // remaining block is zero; cannot happen for xI - A
            std::swap(m[t], m[pr]);
            for (auto& row : m) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t].is_zero()) continue;
                const Poly q = poly_divmod(m[i][t], m[t][t]).first;
                for (std::size_t j = t; j < n; ++j) m[i][j] -= q * m[t][j];
                if (!m[i][t].is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j].is_zero()) continue;
                const Poly q = poly_divmod(m[t][j], m[t][t]).first;
                for (std::size_t i = t; i < n; ++i) m[i][j] -= q * m[i][t];
                if (!m[t][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into row t and retry.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < n && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!m[i][j].is_zero() && !poly_divides(m[t][t], m[i][j])) {
                        for (std::size_t c = t; c < n; ++c) m[t][c] += m[i][c];
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
    }
    std::vector<Poly> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(m[i][i].is_zero() ? Poly(field) : m[i][i].monic());
    return out;
}

bool is_balanced_matrix(const Matrix& a) {
    for (const auto& f : invariant_factors(a))
        if (f.degree() > 0 && !is_balanced_poly(f)) return false;
    return true;
}

bool is_nilpotent(const Matrix& a) {
    const Poly p = char_poly(a);
    return p == Poly::monomial(Scalar::one(a.field()), a.rows());
}

Matrix companion(const Poly& f) {
    if (f.is_zero() || f.degree() == 0) throw Error(ErrorKind::DegreeZero, "companion matrix needs degree >= 1");
    if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "companion matrix needs a monic polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    Matrix c(n, n, f.field());
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n) c(i + 1, i) = Scalar::one(f.field());
        c(i, n - 1) = -f.coeffs()[i];
    }
    return c;
}

Poly balanced_factor(const Poly& m) {
    const Poly d = poly_gcd(m, m.reflect());
    Poly b = d;
    for (;;) {
        const Poly g = poly_gcd(poly_divmod(m, b).first, d);
        if (g.degree() <= 0) break;
        b *= g;
    }
    return b;
}

BalancedSplit balanced_split(const Matrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    const FieldTag field = a.field();
    if (n == 0) return {a, a, a};
    const Poly m = min_poly(a);
    const Poly b = balanced_factor(m);
    const Poly c = poly_divmod(m, b).first;
    const XgcdResult bez = poly_xgcd(b, c);
    const Matrix p = eval_at_matrix(bez.v * c, a);
    const Matrix e = a * p;
    return {e, a * (Matrix::identity(n, field) - p), p};
}

Matrix double_cover(const Matrix& a) {
    require_square(a);
    return block_diag({a, -a});
}

StructureReport structure_report(const Matrix& a) {
    StructureReport r;
    r.char_poly = char_poly(a);
    r.min_poly = min_poly(a);
    r.invariant_factors = invariant_factors(a);
    r.is_balanced = std::all_of(r.invariant_factors.begin(), r.invariant_factors.end(),
                                [](const Poly& f) { return f.degree() <= 0 || is_balanced_poly(f); });
    r.is_nilpotent = r.char_poly == Poly::monomial(Scalar::one(a.field()), a.rows());
    r.min_equals_char = r.min_poly == r.char_poly;
    return r;
}

}  // namespace commalg
