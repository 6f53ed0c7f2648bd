#pragma once

// Iterated commutators Ad_A^k(X) = [A, [A, ... [A, X]]].

#include <cstddef>

#include "commalg/linalg.hpp"
#include "commalg/polyring.hpp"

namespace commalg {

inline constexpr int kDefaultAdPowerCap = 16;

class AdOperator {
public:
    explicit AdOperator(Matrix a);

    const Matrix& a() const noexcept { return a_; }
    /// A kron I - I kron A^T under row-major vec.
    const Matrix& op_matrix() const noexcept { return op_; }

    /// AX - XA, computed directly.
    Matrix apply(const Matrix& x) const;
    Matrix apply_power(const Matrix& x, int k) const;

private:
    Matrix a_;
    Matrix op_;
};

/// Kernel of op_matrix^k reshaped to matrices. Throws BadExponent unless 1 <= k <= cap.
SubspaceBasis ad_power_kernel(const Matrix& a, int k, int cap = kDefaultAdPowerCap);

/// sum_{i=0}^k binom(k,i) (-1)^i X^{k-i} B X^i == O, i.e. Ad_X^k(B) = O.
bool ann_k_member(const Matrix& x, const Matrix& b, int k);

/// Every basis element of Ker Ad_A^k is killed by Ad_{f(A)}^k.
bool ad_inclusion_check(const Matrix& a, const Poly& f, int k, int cap = kDefaultAdPowerCap);

/// sum_{i=0}^k binom(k,i) A^{k-i} D A^i, the anticommutator analogue of Ad_A^k(D).
Matrix anticommutator_power(const Matrix& a, const Matrix& d, int k);

/// diag(1, -2, 3, ..., (-1)^{n-1} n).
Matrix alternating_weight_matrix(std::size_t n, FieldTag field = FieldTag::rational());

}  // namespace commalg
