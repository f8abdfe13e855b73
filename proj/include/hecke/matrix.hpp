#pragma once

#include "hecke/rational.hpp"

#include <cassert>
#include <functional>
#include <optional>
#include <vector>

namespace hecke {

/// Dense exact matrix over a field F (F needs +,-,*,/, ==, is_zero()).
template <typename F>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}
    Matrix(size_t rows, size_t cols, std::vector<F> data)
        : rows_(rows), cols_(cols), a_(std::move(data))
    {
        assert(a_.size() == rows_ * cols_);
    }

    static Matrix identity(size_t n)
    {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = F(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F &operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const F &operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix &x, const Matrix &y)
    {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Matrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k)
            r.a_[k] += y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix &x, const Matrix &y)
    {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Matrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k)
            r.a_[k] -= y.a_[k];
        return r;
    }
    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto &v : r.a_)
            v = -v;
        return r;
    }
    friend Matrix operator*(const Matrix &x, const Matrix &y)
    {
        assert(x.cols_ == y.rows_);
        Matrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const F &v = x(i, k);
                if (v == F(0))
                    continue;
                for (size_t j = 0; j < y.cols_; ++j)
                    r(i, j) += v * y(k, j);
            }
        return r;
    }
    friend Matrix operator*(const F &c, const Matrix &x)
    {
        Matrix r = x;
        for (auto &v : r.a_)
            v = c * v;
        return r;
    }
    friend bool operator==(const Matrix &x, const Matrix &y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix &x, const Matrix &y) { return !(x == y); }

    bool is_zero() const
    {
        for (const auto &v : a_)
            if (!(v == F(0)))
                return false;
        return true;
    }
    bool is_scalar() const
    {
        if (!is_square())
            return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (i != j && !((*this)(i, j) == F(0)))
                    return false;
        for (size_t i = 1; i < rows_; ++i)
            if (!((*this)(i, i) == (*this)(0, 0)))
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    F trace() const
    {
        assert(is_square());
        F t(0);
        for (size_t i = 0; i < rows_; ++i)
            t += (*this)(i, i);
        return t;
    }

    Matrix pow(size_t e) const
    {
        assert(is_square());
        Matrix r = identity(rows_);
        Matrix b = *this;
        while (e) {
            if (e & 1)
                r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    std::vector<F> apply(const std::vector<F> &v) const
    {
        assert(v.size() == cols_);
        std::vector<F> r(rows_, F(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!((*this)(i, j) == F(0)))
                    r[i] += (*this)(i, j) * v[j];
        return r;
    }

    /// In-place row reduction to reduced echelon form; returns pivot columns.
    std::vector<size_t> rref()
    {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            size_t sel = row;
            while (sel < rows_ && (*this)(sel, col) == F(0))
                ++sel;
            if (sel == rows_)
                continue;
            if (sel != row)
                for (size_t j = 0; j < cols_; ++j)
                    std::swap((*this)(sel, j), (*this)(row, j));
            F inv = F(1) / (*this)(row, col);
            for (size_t j = col; j < cols_; ++j)
                (*this)(row, j) = inv * (*this)(row, j);
            for (size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, col) == F(0))
                    continue;
                F factor = (*this)(i, col);
                for (size_t j = col; j < cols_; ++j)
                    (*this)(i, j) -= factor * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const
    {
        Matrix tmp = *this;
        return tmp.rref().size();
    }

    /// Canonical basis of the null space (one vector per free column).
    std::vector<std::vector<F>> kernel() const
    {
        Matrix tmp = *this;
        auto pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t p : pivots)
            is_pivot[p] = true;
        std::vector<std::vector<F>> basis;
        for (size_t col = 0; col < cols_; ++col) {
            if (is_pivot[col])
                continue;
            std::vector<F> v(cols_, F(0));
            v[col] = F(1);
            for (size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -tmp(r, col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// One solution of A x = b, if any.
    std::optional<std::vector<F>> solve(const std::vector<F> &b) const
    {
        assert(b.size() == rows_);
        Matrix aug(rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j)
                aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_)
            return std::nullopt;
        std::vector<F> x(cols_, F(0));
        for (size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = aug(r, cols_);
        return x;
    }

    std::optional<Matrix> inverse() const
    {
        assert(is_square());
        size_t n = rows_;
        Matrix aug(n, 2 * n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j)
                aug(i, j) = (*this)(i, j);
            aug(i, n + i) = F(1);
        }
        auto pivots = aug.rref();
        if (pivots.size() != n || pivots.back() != n - 1)
            return std::nullopt;
        Matrix inv(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                inv(i, j) = aug(i, n + j);
        return inv;
    }

    F det() const
    {
        assert(is_square());
        Matrix tmp = *this;
        F d(1);
        size_t n = rows_;
        for (size_t col = 0; col < n; ++col) {
            size_t sel = col;
            while (sel < n && tmp(sel, col) == F(0))
                ++sel;
            if (sel == n)
                return F(0);
            if (sel != col) {
                for (size_t j = 0; j < n; ++j)
                    std::swap(tmp(sel, j), tmp(col, j));
                d = -d;
            }
            d *= tmp(col, col);
            F inv = F(1) / tmp(col, col);
            for (size_t i = col + 1; i < n; ++i) {
                if (tmp(i, col) == F(0))
                    continue;
                F factor = inv * tmp(i, col);
                for (size_t j = col; j < n; ++j)
                    tmp(i, j) -= factor * tmp(col, j);
            }
        }
        return d;
    }

    /// Coefficients of det(tI - A), ascending degree (Faddeev-LeVerrier).
    std::vector<F> charpoly() const
    {
        assert(is_square());
        size_t n = rows_;
        std::vector<F> c(n + 1, F(0));
        c[n] = F(1);
        Matrix m(n, n);
        for (size_t k = 1; k <= n; ++k) {
            for (size_t i = 0; i < n; ++i)
                m(i, i) += c[n - k + 1];
            m = (*this) * m;
            F t = m.trace();
            c[n - k] = -(t / F(static_cast<int>(k)));
        }
        return c;
    }

    const std::vector<F> &data() const { return a_; }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<F> a_;
};

/// Column-span basis in reduced echelon form (canonical representative).
template <typename F>
std::vector<std::vector<F>> echelon_span(std::vector<std::vector<F>> vecs)
{
    if (vecs.empty())
        return {};
    size_t dim = vecs[0].size();
    Matrix<F> m(vecs.size(), dim);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < dim; ++j)
            m(i, j) = vecs[i][j];
    auto pivots = m.rref();
    std::vector<std::vector<F>> out;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<F> v(dim);
        for (size_t j = 0; j < dim; ++j)
            v[j] = m(r, j);
        out.push_back(std::move(v));
    }
    return out;
}

template <typename F>
bool in_span(const std::vector<std::vector<F>> &span, const std::vector<F> &v)
{
    auto base = echelon_span(span);
    auto ext = base;
    ext.push_back(v);
    return echelon_span(ext).size() == base.size();
}

/// Coordinates of v in an echelonized basis; nullopt when v lies outside.
template <typename F>
std::optional<std::vector<F>> coords_in_echelon_basis(const std::vector<std::vector<F>> &basis,
                                                      const std::vector<F> &v)
{
    std::vector<F> coords(basis.size(), F(0));
    std::vector<F> rest = v;
    for (size_t r = 0; r < basis.size(); ++r) {
        size_t piv = 0;
        while (piv < basis[r].size() && basis[r][piv] == F(0))
            ++piv;
        coords[r] = rest[piv];
        if (!(coords[r] == F(0)))
            for (size_t j = 0; j < rest.size(); ++j)
                rest[j] -= coords[r] * basis[r][j];
    }
    for (const auto &c : rest)
        if (!(c == F(0)))
            return std::nullopt;
    return coords;
}

/// Restriction of an operator to an invariant subspace given by an
/// echelonized basis; throws when the subspace is not invariant.
template <typename F>
Matrix<F> restrict_operator(const Matrix<F> &op, const std::vector<std::vector<F>> &basis)
{
    size_t d = basis.size();
    Matrix<F> out(d, d);
    for (size_t c = 0; c < d; ++c) {
        auto img = op.apply(basis[c]);
        auto coords = coords_in_echelon_basis(basis, img);
        if (!coords)
            throw std::logic_error("operator does not preserve the subspace");
        for (size_t r = 0; r < d; ++r)
            out(r, c) = (*coords)[r];
    }
    return out;
}

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<GaussianRational>;

} // namespace hecke
