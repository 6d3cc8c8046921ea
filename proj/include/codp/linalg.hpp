#pragma once

#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace codp {

using Vector = std::vector<Rational>;

class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const
    {
        return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    Vector column(std::size_t c) const
    {
        Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, const Vector& v)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, c) = v[r];
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (sgn(x) != 0)
                return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(i, k);
                if (sgn(x) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (sgn(b(k, j)) != 0)
                        out(i, j) += x * b(k, j);
            }
        return out;
    }

    friend Vector operator*(const Matrix& a, const Vector& v)
    {
        Vector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0)
                    out[i] += a(i, k) * v[k];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in order.
inline std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0)
                continue;
            Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0)
                    m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix m)
{
    return rref(m).size();
}

/// Basis of the right null space {x : m x = 0}.
inline std::vector<Vector> kernel(Matrix m)
{
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of m x = b, if any.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto pivots = rref(aug);
    Vector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols())
            return std::nullopt;
        x[pivots[r]] = aug(r, m.cols());
    }
    return x;
}

inline Rational determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw ComputationError("determinant of a non-square matrix");
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && sgn(m(sel, col)) == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(sel, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m(r, col)) == 0)
                continue;
            Rational factor = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

/// Incrementally maintained echelon basis of a subspace of Q^n.
class RowSpan
{
public:
    explicit RowSpan(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }

    /// Reduce v modulo the span; the remainder is zero iff v lies in it.
    Vector reduce(Vector v) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& x = v[pivots_[i]];
            if (sgn(x) == 0)
                continue;
            Rational factor = x;
            for (std::size_t c = 0; c < dim_; ++c)
                if (sgn(rows_[i][c]) != 0)
                    v[c] -= factor * rows_[i][c];
        }
        return v;
    }

    bool contains(const Vector& v) const { return is_zero(reduce(v)); }

    /// Adds v to the span; returns false if it was already contained.
    bool add(const Vector& v)
    {
        Vector r = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && sgn(r[p]) == 0)
            ++p;
        if (p == dim_)
            return false;
        Rational inv = 1 / r[p];
        for (auto& x : r)
            x *= inv;
        for (auto& row : rows_) {
            if (sgn(row[p]) == 0)
                continue;
            Rational factor = row[p];
            for (std::size_t c = 0; c < dim_; ++c)
                if (sgn(r[c]) != 0)
                    row[c] -= factor * r[c];
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace codp
