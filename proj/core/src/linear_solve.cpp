#include "dcoh/linear_solve.hpp"

#include "dcoh/smith.hpp"

#include <string>

namespace dcoh {

namespace {

void check_dims(std::size_t rows, std::size_t b_size)
{
    if (rows != b_size)
        throw InputError("dimension mismatch: matrix has " + std::to_string(rows) + " rows, right-hand side has " +
                         std::to_string(b_size) + " entries");
}

// Reduced row echelon form of the dense matrix m (in place). Returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][c];
        for (auto& x : m[row])
            if (x != 0) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t k = c; k < m[r].size(); ++k)
                if (m[row][k] != 0) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b)
{
    check_dims(a.rows(), b.size());
    if (a.cols() == 0) {
        if (is_zero(b)) return IntVector{};
        return std::nullopt;
    }
    const SnfResult snf = smith_normal_form(a);
    const IntVector ub = snf.U.apply(b);
    const auto diag = snf.diagonal();
    IntVector y(a.cols(), 0);
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < diag.size()) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), diag[i].get_mpz_t())) return std::nullopt;
            y[i] = ub[i] / diag[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V.apply(y);
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b)
{
    check_dims(a.rows(), b.size());
    const std::size_t n = a.cols();
    std::vector<RatVector> m(a.rows(), RatVector(n + 1, 0));
    a.for_each([&](std::size_t r, std::size_t c, const Rational& v) { m[r][c] = v; });
    for (std::size_t r = 0; r < a.rows(); ++r) m[r][n] = b[r];
    const auto pivots = rref(m, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    RatVector x(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][n];
    return x;
}

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b, Ring ring)
{
    if (ring == Ring::Q) return solve_rational(a, b);
    check_dims(a.rows(), b.size());
    IntMatrix ai(a.rows(), a.cols());
    bool integral = true;
    a.for_each([&](std::size_t r, std::size_t c, const Rational& v) {
        if (!is_integral(v)) integral = false;
        else ai.set(r, c, v.get_num());
    });
    IntVector bi;
    for (const auto& v : b) {
        if (!is_integral(v)) integral = false;
        bi.push_back(v.get_num());
    }
    if (!integral) throw InputError("solve_linear over Z requires integral matrix and right-hand side");
    auto x = solve_integer(ai, bi);
    if (!x) return std::nullopt;
    return to_rational(*x);
}

IntMatrix integer_kernel(const IntMatrix& a)
{
    if (a.cols() == 0) return IntMatrix(0, 0);
    const SnfResult snf = smith_normal_form(a);
    const std::size_t r = snf.diagonal().size();
    std::vector<std::size_t> keep;
    for (std::size_t j = r; j < a.cols(); ++j) keep.push_back(j);
    return snf.V.select_cols(keep);
}

RatMatrix rational_kernel(const RatMatrix& a)
{
    const std::size_t n = a.cols();
    std::vector<RatVector> m(a.rows(), RatVector(n, 0));
    a.for_each([&](std::size_t r, std::size_t c, const Rational& v) { m[r][c] = v; });
    const auto pivots = rref(m, n);
    std::vector<char> is_pivot(n, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix k(n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        k.set(free_cols[j], j, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (m[i][free_cols[j]] != 0) k.set(pivots[i], j, -m[i][free_cols[j]]);
    }
    return k;
}

std::vector<std::size_t> pivot_columns(const RatMatrix& a)
{
    std::vector<RatVector> m(a.rows(), RatVector(a.cols(), 0));
    a.for_each([&](std::size_t r, std::size_t c, const Rational& v) { m[r][c] = v; });
    return rref(m, a.cols());
}

}  // namespace dcoh
