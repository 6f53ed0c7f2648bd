#include "commalg/adpower.hpp"

#include <algorithm>

#include "commalg/commutant.hpp"

namespace commalg {

namespace {

void check_exponent(int k, int cap) {
    if (k < 1 || k > cap)
        throw Error(ErrorKind::BadExponent,
                    "exponent " + std::to_string(k) + " outside [1, " + std::to_string(cap) + "]");
}

Scalar binomial(int k, int i, FieldTag field) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
    return Scalar::from_rational(Rational(b), field);
}

}  // namespace

AdOperator::AdOperator(Matrix a) : a_(std::move(a)), op_(twisted_operator(a_, Scalar::one(a_.field()))) {}

Matrix AdOperator::apply(const Matrix& x) const { return a_ * x - x * a_; }

Matrix AdOperator::apply_power(const Matrix& x, int k) const {
    Matrix y = x;
    for (int i = 0; i < k; ++i) y = apply(y);
    return y;
}

SubspaceBasis ad_power_kernel(const Matrix& a, int k, int cap) {
    require_square(a);
    check_exponent(k, cap);
    const std::size_t n = a.rows();
    const Matrix op = AdOperator(a).op_matrix().pow(static_cast<unsigned long long>(k));
    const auto kernel = kernel_basis(op);
    Matrix rows(kernel.size(), n * n, a.field());
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < n * n; ++j) rows(i, j) = kernel[i](j, 0);
    return SubspaceBasis::from_vectors(rows, n);
}

bool ann_k_member(const Matrix& x, const Matrix& b, int k) {
    require_square(x);
    require_same_shape(x, b);
    check_exponent(k, std::max(k, 1));
    return AdOperator(x).apply_power(b, k).is_zero();
}

bool ad_inclusion_check(const Matrix& a, const Poly& f, int k, int cap) {
    const SubspaceBasis kernel = ad_power_kernel(a, k, cap);
    const AdOperator ad_f(eval_at_matrix(f, a));
    return std::all_of(kernel.basis().begin(), kernel.basis().end(),
                       [&](const Matrix& x) { return ad_f.apply_power(x, k).is_zero(); });
}

Matrix anticommutator_power(const Matrix& a, const Matrix& d, int k) {
    require_square(a);
    require_same_shape(a, d);
    Matrix sum(a.rows(), a.cols(), a.field());
    for (int i = 0; i <= k; ++i)
        sum += binomial(k, i, a.field()) * (a.pow(static_cast<unsigned long long>(k - i)) * d *
                                            a.pow(static_cast<unsigned long long>(i)));
    return sum;
}

Matrix alternating_weight_matrix(std::size_t n, FieldTag field) {
    Matrix d(n, n, field);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<long long>(i + 1);
        d(i, i) = Scalar::from_int(i % 2 == 0 ? v : -v, field);
    }
    return d;
}

}  // namespace commalg
