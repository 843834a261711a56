#pragma once

#include "dcoh/integer.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace dcoh {

/// Column-major sparse matrix. Every stored entry is nonzero and every
/// column is sorted by row index.
template <typename T>
class SparseMatrix {
public:
    using value_type = T;
    using Entry = std::pair<std::size_t, T>;
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

    static SparseMatrix identity(std::size_t n)
    {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, T(1));
        return m;
    }

    static SparseMatrix from_dense(const std::vector<std::vector<T>>& rows, std::size_t cols)
    {
        SparseMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            assert(rows[r].size() == cols);
            for (std::size_t c = 0; c < cols; ++c)
                if (rows[r][c] != 0) m.data_[c].emplace_back(r, rows[r][c]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Column& column(std::size_t c) const { return data_[c]; }

    T get(std::size_t r, std::size_t c) const
    {
        const auto& col = data_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::size_t row) { return e.first < row; });
        if (it != col.end() && it->first == r) return it->second;
        return T(0);
    }

    void set(std::size_t r, std::size_t c, const T& value)
    {
        assert(r < rows_ && c < cols_);
        auto& col = data_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::size_t row) { return e.first < row; });
        if (it != col.end() && it->first == r) {
            if (value == 0) col.erase(it);
            else it->second = value;
        } else if (value != 0) {
            col.insert(it, Entry(r, value));
        }
    }

    void add_to(std::size_t r, std::size_t c, const T& value)
    {
        if (value == 0) return;
        set(r, c, get(r, c) + value);
    }

    /// Replaces column c wholesale; entries must be sorted and nonzero.
    void set_column(std::size_t c, Column col) { data_[c] = std::move(col); }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& col : data_) n += col.size();
        return n;
    }

    bool is_zero() const
    {
        for (const auto& col : data_)
            if (!col.empty()) return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : data_[c]) f(r, c, v);
    }

    SparseMatrix transpose() const
    {
        SparseMatrix t(cols_, rows_);
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : data_[c]) t.data_[r].emplace_back(c, v);
        return t;
    }

    std::vector<T> apply(const std::vector<T>& x) const
    {
        assert(x.size() == cols_);
        std::vector<T> y(rows_, T(0));
        for (std::size_t c = 0; c < cols_; ++c) {
            if (x[c] == 0) continue;
            for (const auto& [r, v] : data_[c]) y[r] += v * x[c];
        }
        return y;
    }

    std::vector<std::vector<T>> to_dense() const
    {
        std::vector<std::vector<T>> d(rows_, std::vector<T>(cols_, T(0)));
        for_each([&](std::size_t r, std::size_t c, const T& v) { d[r][c] = v; });
        return d;
    }

    /// Adds sign * m into this matrix with its top-left corner at (r0, c0).
    void place(const SparseMatrix& m, std::size_t r0, std::size_t c0, int sign = 1)
    {
        assert(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_);
        m.for_each([&](std::size_t r, std::size_t c, const T& v) {
            add_to(r0 + r, c0 + c, sign >= 0 ? v : T(-v));
        });
    }

    SparseMatrix select_rows(const std::vector<std::size_t>& keep) const
    {
        std::vector<std::ptrdiff_t> where(rows_, -1);
        for (std::size_t i = 0; i < keep.size(); ++i) where[keep[i]] = static_cast<std::ptrdiff_t>(i);
        SparseMatrix out(keep.size(), cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            for (const auto& [r, v] : data_[c])
                if (where[r] >= 0) out.data_[c].emplace_back(static_cast<std::size_t>(where[r]), v);
            std::sort(out.data_[c].begin(), out.data_[c].end(),
                      [](const Entry& a, const Entry& b) { return a.first < b.first; });
        }
        return out;
    }

    SparseMatrix select_cols(const std::vector<std::size_t>& keep) const
    {
        SparseMatrix out(rows_, keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) out.data_[i] = data_[keep[i]];
        return out;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        assert(a.cols_ == b.rows_);
        SparseMatrix out(a.rows_, b.cols_);
        std::vector<T> acc(a.rows_, T(0));
        std::vector<char> touched(a.rows_, 0);
        std::vector<std::size_t> rows_hit;
        for (std::size_t c = 0; c < b.cols_; ++c) {
            rows_hit.clear();
            for (const auto& [k, bv] : b.data_[c]) {
                for (const auto& [r, av] : a.data_[k]) {
                    if (!touched[r]) {
                        touched[r] = 1;
                        rows_hit.push_back(r);
                    }
                    acc[r] += av * bv;
                }
            }
            std::sort(rows_hit.begin(), rows_hit.end());
            for (auto r : rows_hit) {
                if (acc[r] != 0) out.data_[c].emplace_back(r, acc[r]);
                acc[r] = 0;
                touched[r] = 0;
            }
        }
        return out;
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b)
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        SparseMatrix out = a;
        out.place(b, 0, 0, 1);
        return out;
    }

    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b)
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        SparseMatrix out = a;
        out.place(b, 0, 0, -1);
        return out;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Column> data_;
};

using IntMatrix = SparseMatrix<Integer>;
using RatMatrix = SparseMatrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Block diagonal sum of a list of matrices.
IntMatrix direct_sum(const std::vector<IntMatrix>& blocks);

/// Kronecker product a ⊗ b, rows indexed (i_a * b.rows + i_b).
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

}  // namespace dcoh
