#include "commalg/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "commalg/rng.hpp"

namespace commalg {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Gauss-Jordan in place; returns pivot columns.
std::vector<std::size_t> reduce_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, r, p);
        const Scalar inv = scalar_inverse(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j).sub_mul(factor, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Matrix take_rows(const Matrix& m, std::size_t count) {
    Matrix out(count, m.cols(), m.field());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldTag field)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, FieldTag field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return Matrix();
    const FieldTag field = rows.front().empty() ? FieldTag::rational() : rows.front().front().field();
    Matrix m(rows.size(), rows.front().size(), field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error(ErrorKind::RaggedRows, "rows have unequal lengths");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Scalar>> table;
    for (const auto& row : rows) {
        auto& out = table.emplace_back();
        for (long long v : row) out.emplace_back(Scalar::from_int(v, FieldTag::rational()));
    }
    return from_rows(table);
}

Matrix Matrix::diagonal(std::span<const Scalar> values) {
    const FieldTag field = values.empty() ? FieldTag::rational() : values.front().field();
    Matrix m(values.size(), values.size(), field);
    for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    if (i >= rows_ || j >= cols_) throw Error(ErrorKind::IndexOutOfRange, "matrix index out of range");
    require_same_field(field_, value.field());
    data_[i * cols_ + j] = std::move(value);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::promote(int q) const {
    Matrix out(rows_, cols_, q == 0 ? FieldTag::rational() : FieldTag::cyclotomic(q));
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].promote(q);
    return out;
}

Matrix Matrix::pow(unsigned long long e) const {
    require_square(*this);
    Matrix result = identity(rows_, field_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs);
    require_same_field(field_, rhs.field_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs);
    require_same_field(field_, rhs.field_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    require_same_field(field_, s.field());
    for (auto& x : data_)
        if (!x.is_zero()) x *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::ShapeMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
    require_same_field(a.field_, b.field_);
    Matrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j).add_mul(aik, b(k, j));
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void require_square(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::NotSquare, "expected a square matrix, got " + shape(a));
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::ShapeMismatch, "shape mismatch: " + shape(a) + " vs " + shape(b));
}

// ---------------------------------------------------------------------------
// Constructions

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    if (!b(r, c).is_zero()) k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
        }
    return k;
}

Matrix block_diag(std::span<const Matrix> blocks) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    const FieldTag field = blocks.empty() ? FieldTag::rational() : blocks.front().field();
    for (const auto& b : blocks) {
        require_same_field(field, b.field());
        rows += b.rows();
        cols += b.cols();
    }
    Matrix m(rows, cols, field);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Matrix block_diag(std::initializer_list<Matrix> blocks) {
    return block_diag(std::span<const Matrix>(blocks.begin(), blocks.size()));
}

Matrix vec(const Matrix& x) {
    Matrix v(x.rows() * x.cols(), 1, x.field());
    for (std::size_t k = 0; k < x.entries().size(); ++k) v(k, 0) = x.entries()[k];
    return v;
}

Matrix unvec(const Matrix& v, std::size_t n) {
    const std::size_t len = v.rows() * v.cols();
    if (len != n * n || (v.rows() != 1 && v.cols() != 1))
        throw Error(ErrorKind::ShapeMismatch, "unvec: expected a vector of length " + std::to_string(n * n));
    Matrix x(n, n, v.field());
    for (std::size_t k = 0; k < len; ++k) x(k / n, k % n) = v.entries()[k];
    return x;
}

Matrix jordan_block(std::size_t n, const Scalar& lambda) {
    Matrix j(n, n, lambda.field());
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = lambda;
        if (i + 1 < n) j(i, i + 1) = Scalar::one(lambda.field());
    }
    return j;
}

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, FieldTag field) {
    Matrix e(n, n, field);
    e.set(i, j, Scalar::one(field));
    return e;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
    RrefResult out{m, {}, 0};
    out.pivots = reduce_in_place(out.reduced);
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Matrix> kernel_basis(const Matrix& m) {
    const auto [r, pivots, rk] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Matrix> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Matrix v(m.cols(), 1, m.field());
        v(f, 0) = Scalar::one(m.field());
        for (std::size_t i = 0; i < rk; ++i)
            if (!r(i, f).is_zero()) v(pivots[i], 0) = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(const Matrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    if (n == 0) return Scalar::one(a.field());
    Matrix m = a;
    Scalar scale = Scalar::one(a.field());
    if (a.field().is_rational()) {
        // Clear denominators row by row so Bareiss runs over the integers.
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class l = 1;
            for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
            if (l == 1) continue;
            const Scalar f{Rational(l)};
            for (std::size_t j = 0; j < n; ++j) m(i, j) *= f;
            scale *= f;
        }
    }
    bool negate = false;
    Scalar prev = Scalar::one(a.field());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Scalar::zero(a.field());
            swap_rows(m, k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Scalar v = m(i, j) * m(k, k);
                v.sub_mul(m(i, k), m(k, j));
                m(i, j) = v / prev;
            }
            m(i, k) = Scalar::zero(a.field());
        }
        prev = m(k, k);
    }
    Scalar det = m(n - 1, n - 1) / scale;
    return negate ? -det : det;
}

Matrix inverse(const Matrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n, a.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Scalar::one(a.field());
    }
    const auto pivots = reduce_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::ZeroInverse, "matrix is singular");
    Matrix inv(n, n, a.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Subspaces

SubspaceBasis::SubspaceBasis(std::size_t ambient_n, FieldTag field)
    : n_(ambient_n), field_(field), rows_(0, ambient_n * ambient_n, field) {}

SubspaceBasis SubspaceBasis::from_vectors(const Matrix& vectors, std::size_t ambient_n) {
    if (vectors.cols() != ambient_n * ambient_n)
        throw Error(ErrorKind::ShapeMismatch, "subspace vectors must have length n^2");
    SubspaceBasis s(ambient_n, vectors.field());
    auto [reduced, pivots, rk] = rref(vectors);
    s.rows_ = take_rows(reduced, rk);
    s.pivots_ = std::move(pivots);
    for (std::size_t i = 0; i < rk; ++i) {
        Matrix x(ambient_n, ambient_n, vectors.field());
        for (std::size_t k = 0; k < s.rows_.cols(); ++k) x(k / ambient_n, k % ambient_n) = s.rows_(i, k);
        s.basis_.push_back(std::move(x));
    }
    return s;
}

bool SubspaceBasis::contains(const Matrix& x) const {
    if (x.rows() != n_ || x.cols() != n_) throw Error(ErrorKind::ShapeMismatch, "subspace_contains: wrong shape");
    require_same_field(field_, x.field());
    std::vector<Scalar> v = x.entries();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Scalar c = v[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t k = pivots_[i]; k < v.size(); ++k)
            if (!rows_(i, k).is_zero()) v[k].sub_mul(c, rows_(i, k));
    }
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

SubspaceBasis subspace_from_matrices(std::span<const Matrix> mats, std::size_t ambient_n, FieldTag field) {
    Matrix rows(mats.size(), ambient_n * ambient_n, field);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (mats[i].rows() != ambient_n || mats[i].cols() != ambient_n)
            throw Error(ErrorKind::ShapeMismatch, "subspace_from_matrices: every matrix must be n x n");
        require_same_field(field, mats[i].field());
        for (std::size_t k = 0; k < rows.cols(); ++k) rows(i, k) = mats[i].entries()[k];
    }
    return SubspaceBasis::from_vectors(rows, ambient_n);
}

SubspaceBasis subspace_from_matrices(std::span<const Matrix> mats) {
    if (mats.empty()) throw Error(ErrorKind::ShapeMismatch, "cannot infer the ambient space of an empty list");
    return subspace_from_matrices(mats, mats.front().rows(), mats.front().field());
}

bool subspace_equal(const SubspaceBasis& s, const SubspaceBasis& t) {
    if (s.ambient_n() != t.ambient_n())
        throw Error(ErrorKind::AmbientMismatch, "subspaces live in different matrix spaces");
    require_same_field(s.field(), t.field());
    return s.rref_rows() == t.rref_rows();
}

bool subspace_contains(const SubspaceBasis& s, const Matrix& x) { return s.contains(x); }

bool subspace_includes(const SubspaceBasis& t, const SubspaceBasis& s) {
    return std::all_of(s.basis().begin(), s.basis().end(), [&](const Matrix& x) { return t.contains(x); });
}

std::optional<Matrix> random_invertible_probe(const SubspaceBasis& s, int trials, std::uint64_t seed) {
    if (s.dim() == 0) return std::nullopt;
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const long long h = trial + 1;
        Matrix x(s.ambient_n(), s.ambient_n(), s.field());
        for (const auto& b : s.basis()) {
            const long long c = rng.uniform(-h, h);
            if (c != 0) x += Scalar::from_int(c, s.field()) * b;
        }
        if (!determinant(x).is_zero()) return x;
    }
    return std::nullopt;
}

}  // namespace commalg
