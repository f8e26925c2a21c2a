#pragma once

// Dense exact matrices: rank, reduced row echelon form and kernels.
//
// Over Q the rank is computed by fraction-free (Bareiss) elimination on the
// integer matrix obtained by clearing denominators row by row. Over F_p plain
// Gaussian elimination on machine residues is used.

#include "mukai/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mukai {

using Vector = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals())
        : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

    /// Builds a matrix from explicit rows; all entries must share one field.
    static Matrix from_rows(const std::vector<Vector>& rows) {
        if (rows.empty()) return Matrix();
        const std::size_t cols = rows.front().size();
        Field f = cols > 0 ? rows.front().front().field() : Field::rationals();
        Matrix m(rows.size(), cols, f);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static Matrix from_ints(std::initializer_list<std::initializer_list<long long>> rows,
                            Field f = Field::rationals()) {
        const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
        Matrix m(rows.size(), cols, f);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols) throw std::invalid_argument("ragged rows");
            std::size_t j = 0;
            for (long long v : row) m.entries_[i * cols + j++] = Scalar::from_int(v, f);
            ++i;
        }
        return m;
    }

    static Matrix identity(std::size_t n, Field f = Field::rationals()) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::one(f);
        return m;
    }

    /// Stacks column vectors side by side.
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows, Field f) {
        Matrix m(rows, columns.size(), f);
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, Scalar v) {
        require_same_field(field_, v.field());
        entries_[i * cols_ + j] = std::move(v);
    }

    void add_to(std::size_t i, std::size_t j, const Scalar& v) { set(i, j, (*this)(i, j) + v); }

    Vector row(std::size_t i) const {
        return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    Vector column(std::size_t j) const {
        Vector c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
        return t;
    }

    Matrix to_field(Field f) const {
        Matrix m(rows_, cols_, f);
        for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k].to_field(f);
        return m;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    bool is_skew_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    Vector apply(std::span<const Scalar> v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        Vector out(rows_, Scalar::zero(field_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Scalar& a = (*this)(i, j);
                if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
            }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        require_same_field(a.field_, b.field_);
        Matrix c(a.rows_, b.cols_, a.field_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c.entries_[i * c.cols_ + j] += x * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        require_same_field(a.field_, b.field_);
        Matrix c = a;
        for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
        return c;
    }

    friend Matrix operator*(const Scalar& s, const Matrix& a) {
        Matrix c = a;
        for (auto& e : c.entries_) e *= s;
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_{};
    std::vector<Scalar> entries_;
};

namespace detail {

inline std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                              std::uint64_t p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const std::uint64_t inv = inv_mod(a[r * cols + c], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t x = a[i * cols + c];
            if (x == 0) continue;
            const std::uint64_t f = mul_mod(x, inv, p);
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t t = mul_mod(f, a[r * cols + j], p);
                std::uint64_t& y = a[i * cols + j];
                y = y >= t ? y - t : y + p - t;
            }
        }
        ++r;
    }
    return r;
}

// Integer row scaled copy of a rational matrix (row rank is unchanged).
inline std::vector<mpz_class> integer_rows(const Matrix& m) {
    std::vector<mpz_class> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpz_class& d = m(i, j).rational_value().get_den();
            if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).rational_value();
            a[i * m.cols() + j] = q.get_num() * (l / q.get_den());
        }
    }
    return a;
}

// Fraction-free elimination; every intermediate entry is a minor of the input,
// so each division by the previous pivot is exact.
inline std::size_t rank_bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols) {
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const mpz_class& pv = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class x = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class& y = a[i * cols + j];
                t = pv * y;
                t -= x * a[r * cols + j];
                mpz_divexact(y.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * cols + c] = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

inline std::vector<std::uint64_t> residues(const Matrix& m) {
    std::vector<std::uint64_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j).residue();
    return a;
}

} // namespace detail

/// Row rank over the matrix's field.
inline std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().is_rational()) {
        auto a = detail::integer_rows(m);
        return detail::rank_bareiss(a, m.rows(), m.cols());
    }
    auto a = detail::residues(m);
    return detail::rank_mod_p(a, m.rows(), m.cols(), m.field().modulus());
}

/// Reduced row echelon form; pivot columns are appended to `pivots` if given.
inline Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr) {
    Matrix a = m;
    const Field f = m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                Scalar tmp = a(piv, j);
                a.set(piv, j, a(r, j));
                a.set(r, j, std::move(tmp));
            }
        const Scalar inv = Scalar::one(f) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j)
            if (!a(r, j).is_zero()) a.set(r, j, a(r, j) * inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar x = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a.set(i, j, a(i, j) - x * a(r, j));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    std::vector<std::size_t> pivots;
    const Matrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline bool is_zero_vector(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

} // namespace mukai
