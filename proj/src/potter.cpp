#include "commalg/potter.hpp"

#include "commalg/canonical.hpp"

namespace commalg {

Matrix into_cyclotomic(const Matrix& m, int q) {
    if (m.field().is_rational()) return m.promote(q);
    require_same_field(m.field(), FieldTag::cyclotomic(q));
    return m;
}

bool omega_commutes(const Matrix& a, const Matrix& b, const OmegaSpec& w) {
    require_square(a);
    require_same_shape(a, b);
    const Matrix ca = into_cyclotomic(a, w.q);
    const Matrix cb = into_cyclotomic(b, w.q);
    return ca * cb == w.omega() * (cb * ca);
}

bool potter_check(const QuasiPair& pair, const Scalar& s, const Scalar& t) {
    if (!omega_commutes(pair.a, pair.b, pair.omega))
        throw Error(ErrorKind::PairInvariantViolated, "pair does not satisfy AB = omega BA");
    const int q = pair.omega.q;
    const Matrix a = into_cyclotomic(pair.a, q);
    const Matrix b = into_cyclotomic(pair.b, q);
    const Scalar cs = s.promote(q);
    const Scalar ct = t.promote(q);
    const auto e = static_cast<unsigned long long>(q);
    const Matrix lhs = (cs * a + ct * b).pow(e);
    const Matrix rhs = power(cs, e) * a.pow(e) + power(ct, e) * b.pow(e);
    return lhs == rhs;
}

QuasiPair weyl_pair(int q, std::size_t n, int k) {
    OmegaSpec w(q, k);
    if (n == 0 || n % static_cast<std::size_t>(q) != 0)
        throw Error(ErrorKind::BadDimensions, "size " + std::to_string(n) + " is not a positive multiple of q = " +
                                                  std::to_string(q));
    const FieldTag field = w.field();
    const auto qs = static_cast<std::size_t>(q);
    Matrix a(n, n, field);
    Matrix b(n, n, field);
    for (std::size_t block = 0; block < n; block += qs)
        for (std::size_t i = 0; i < qs; ++i) {
            a(block + i, block + i) = Scalar(zeta_power(q, static_cast<long long>(i) * w.k));
            b(block + (i + 1) % qs, block + i) = Scalar::one(field);
        }
    return {std::move(a), std::move(b), w};
}

OmegaEquivalenceReport omega_equivalence_check(const Matrix& a, const Matrix& b, const OmegaSpec& w) {
    require_square(a);
    require_same_shape(a, b);
    if (!is_nilpotent(a)) throw Error(ErrorKind::NotNilpotent, "omega equivalence check needs a nilpotent A");
    OmegaEquivalenceReport r;
    r.commutants_equal = subspace_equal(omega_centralizer_basis(a, w), omega_centralizer_basis(b, w));
    const Matrix ca = into_cyclotomic(a, w.q);
    const Matrix cb = into_cyclotomic(b, w.q);
    r.certificate = equivalence_certificate(ca, cb, CongruenceClass::qclass(w.q));
    r.agree = r.commutants_equal == r.certificate.has_value();
    return r;
}

}  // namespace commalg
