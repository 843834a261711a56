#pragma once

// Reference implementations used only by the tests. They work on dense
// matrices with the most direct algorithms available and share no code with
// the library beyond the GMP number types.

#include <dcoh/fg_group.hpp>
#include <dcoh/matrix.hpp>

#include <optional>
#include <vector>

namespace oracle {

using dcoh::Integer;
using dcoh::Rational;
using Dense = std::vector<std::vector<Integer>>;
using DenseQ = std::vector<std::vector<Rational>>;

inline Dense dense(const dcoh::IntMatrix& m)
{
    Dense out(m.rows(), std::vector<Integer>(m.cols(), Integer(0)));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) out[r][c] = v;
    return out;
}

inline Dense multiply(const Dense& a, const Dense& b, std::size_t inner)
{
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    Dense out(a.size(), std::vector<Integer>(cols, Integer(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// Textbook diagonalization by repeated Euclidean reduction of the first
/// row and column; returns the nonzero invariant factors.
inline std::vector<Integer> invariant_factors(Dense a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<Integer> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Bring a smallest nonzero entry of the block to (t, t).
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) return out;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const Integer q = a[i][t] / a[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const Integer q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row t and retry.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
        }
        out.push_back(abs(a[t][t]));
    }
    return out;
}

inline std::size_t rank(const Dense& a) { return invariant_factors(a).size(); }

/// Homology of a chain complex C_0 <- C_1 <- ... given by boundary[n] : C_n -> C_{n-1}
/// (boundary[0] unused) and ranks dims[n].
inline std::vector<dcoh::FgAbGroup> chain_homology(const std::vector<Dense>& boundary, const std::vector<std::size_t>& dims)
{
    std::vector<dcoh::FgAbGroup> out;
    const std::size_t top = dims.size();
    for (std::size_t n = 0; n < top; ++n) {
        const std::size_t rank_out = n == 0 ? 0 : rank(boundary[n]);
        std::vector<Integer> in = n + 1 < top ? invariant_factors(boundary[n + 1]) : std::vector<Integer>{};
        std::vector<Integer> orders(dims[n] - rank_out - in.size(), Integer(0));
        for (const auto& d : in)
            if (d != 1) orders.push_back(d);
        out.push_back(dcoh::FgAbGroup::from_cyclic_orders(orders));
    }
    return out;
}

/// H_n(Z/m; Z) for n ≤ top from the periodic resolution
/// ... -> Z[G] -(N)-> Z[G] -(1-g)-> Z[G] -> Z, whose coinvariants are
/// Z <-0- Z <-m- Z <-0- Z <-m- ...
inline std::vector<dcoh::FgAbGroup> cyclic_group_homology(long m, int top)
{
    std::vector<Dense> boundary(static_cast<std::size_t>(top + 2));
    std::vector<std::size_t> dims(static_cast<std::size_t>(top + 2), 1);
    for (int n = 1; n <= top + 1; ++n) boundary[static_cast<std::size_t>(n)] = Dense{{Integer(n % 2 == 0 ? m : 0)}};
    auto h = chain_homology(boundary, dims);
    h.pop_back();
    return h;
}

/// Solves a x = b over Q by Gauss–Jordan elimination.
inline std::optional<std::vector<Rational>> solve_rational(DenseQ a, std::vector<Rational> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a[i][c] != 0) {
                const Rational f = a[i][c];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
                b[i] -= f * b[r];
            }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
    return x;
}

/// Bareiss determinant.
inline Integer determinant(Dense a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace oracle
