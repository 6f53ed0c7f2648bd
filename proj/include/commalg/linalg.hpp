#pragma once

// Dense exact matrices and linear subspaces of M_n.
//
// Vectorization is row-major everywhere: vec(X)[i*n + j] = X(i, j). Under this
// convention vec(A X B) = (A kron B^T) vec(X).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "commalg/exactfield.hpp"

namespace commalg {

class Matrix {
public:
    Matrix() = default;
    /// Zero matrix.
    Matrix(std::size_t rows, std::size_t cols, FieldTag field = FieldTag::rational());

    static Matrix identity(std::size_t n, FieldTag field = FieldTag::rational());
    /// Field is taken from the entries; all entries must agree.
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_ints(std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix diagonal(std::span<const Scalar> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldTag field() const noexcept { return field_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Unchecked access; writers keep every entry in `field()`.
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    /// Checked write.
    void set(std::size_t i, std::size_t j, Scalar value);

    const std::vector<Scalar>& entries() const noexcept { return data_; }

    bool is_zero() const;
    Matrix transpose() const;
    /// Entrywise embedding into Q(zeta_q).
    Matrix promote(int q) const;
    Matrix pow(unsigned long long e) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& s);
    Matrix operator-() const;

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
    friend Matrix operator*(Matrix m, const Scalar& s) { return m *= s; }
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    FieldTag field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

void require_square(const Matrix& a);
void require_same_shape(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diag(std::span<const Matrix> blocks);
Matrix block_diag(std::initializer_list<Matrix> blocks);

/// Row-major flattening into an (rows*cols) x 1 column.
Matrix vec(const Matrix& x);
/// Inverse of `vec` for an n x n matrix; `v` is a column or a row of length n^2.
Matrix unvec(const Matrix& v, std::size_t n);

/// n x n Jordan block with eigenvalue `lambda`.
Matrix jordan_block(std::size_t n, const Scalar& lambda);
/// Matrix unit E_ij (0-based indices).
Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, FieldTag field = FieldTag::rational());

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : M x = 0}. One column vector per free column of the RREF,
/// in increasing column order, with that free variable set to 1.
std::vector<Matrix> kernel_basis(const Matrix& m);

/// Bareiss elimination. Rational input is scaled to integers first, so every
/// division inside the loop is exact.
Scalar determinant(const Matrix& a);

/// Throws ZeroInverse when singular.
Matrix inverse(const Matrix& a);

/// A linear subspace of M_n stored canonically: the RREF of the row-major
/// vectorizations of a spanning set, with the basis being those rows reshaped.
class SubspaceBasis {
public:
    SubspaceBasis(std::size_t ambient_n, FieldTag field);

    /// Rows of `vectors` are vectorized n x n matrices; they need not be independent.
    static SubspaceBasis from_vectors(const Matrix& vectors, std::size_t ambient_n);

    std::size_t ambient_n() const noexcept { return n_; }
    FieldTag field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Matrix>& basis() const noexcept { return basis_; }
    /// dim x n^2, in reduced row echelon form.
    const Matrix& rref_rows() const noexcept { return rows_; }

    bool contains(const Matrix& x) const;

private:
    std::size_t n_;
    FieldTag field_;
    Matrix rows_;
    std::vector<Matrix> basis_;
    std::vector<std::size_t> pivots_;
};

SubspaceBasis subspace_from_matrices(std::span<const Matrix> mats, std::size_t ambient_n,
                                     FieldTag field = FieldTag::rational());
/// Ambient size and field come from the first matrix; `mats` must be nonempty.
SubspaceBasis subspace_from_matrices(std::span<const Matrix> mats);

/// Canonical-form comparison. Throws AmbientMismatch or FieldMismatch.
bool subspace_equal(const SubspaceBasis& s, const SubspaceBasis& t);
bool subspace_contains(const SubspaceBasis& s, const Matrix& x);
/// Every basis element of `s` lies in `t`.
bool subspace_includes(const SubspaceBasis& t, const SubspaceBasis& s);

/// Random integer combinations of the basis, coefficients drawn from [-H, H]
/// with H = trial + 1; returns the first one with nonzero determinant.
std::optional<Matrix> random_invertible_probe(const SubspaceBasis& s, int trials, std::uint64_t seed);

}  // namespace commalg
