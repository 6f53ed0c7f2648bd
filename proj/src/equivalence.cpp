#include "commalg/equivalence.hpp"

namespace commalg {

std::vector<std::size_t> allowed_exponents(std::size_t n, CongruenceClass cls) {
    std::vector<std::size_t> out;
    out.reserve(n);
    const auto step = static_cast<std::size_t>(cls.modulus());
    for (std::size_t i = 0; i < n; ++i) out.push_back(cls.kind() == CongruenceClass::Kind::General ? i : 1 + step * i);
    return out;
}

std::optional<Poly> express_in_powers(const Matrix& b, const Matrix& a, CongruenceClass cls) {
    require_square(a);
    require_same_shape(a, b);
    require_same_field(a.field(), b.field());
    const std::size_t n = a.rows();
    const FieldTag field = a.field();
    const auto exps = allowed_exponents(n, cls);
    const std::size_t m = exps.size();

    // Columns vec(A^{e_0}), ..., vec(A^{e_{m-1}}) followed by vec(B).
    Matrix system(n * n, m + 1, field);
    Matrix power = Matrix::identity(n, field);
    std::size_t current = 0;
    for (std::size_t c = 0; c < m; ++c) {
        power = power * a.pow(exps[c] - current);
        current = exps[c];
        for (std::size_t k = 0; k < n * n; ++k) system(k, c) = power.entries()[k];
    }
    for (std::size_t k = 0; k < n * n; ++k) system(k, m) = b.entries()[k];

    const auto r = rref(system);
    if (!r.pivots.empty() && r.pivots.back() == m) return std::nullopt;
    std::vector<Scalar> coeffs(exps.empty() ? 0 : exps.back() + 1, Scalar::zero(field));
    for (std::size_t i = 0; i < r.rank; ++i) coeffs[exps[r.pivots[i]]] = r.reduced(i, m);
    return Poly(std::move(coeffs), field);
}

std::optional<Certificate> equivalence_certificate(const Matrix& a, const Matrix& b, CongruenceClass cls) {
    auto f = express_in_powers(b, a, cls);
    if (!f) return std::nullopt;
    auto g = express_in_powers(a, b, cls);
    if (!g) return std::nullopt;
    return Certificate{std::move(*f), std::move(*g), cls};
}

bool verify_certificate(const Matrix& a, const Matrix& b, const Certificate& c) {
    require_same_shape(a, b);
    if (first_offending_exponent(c.f, c.cls) || first_offending_exponent(c.g, c.cls)) return false;
    return eval_at_matrix(c.f, a) == b && eval_at_matrix(c.g, b) == a;
}

}  // namespace commalg
