#include "dcoh/smith.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace dcoh {

namespace {

using Dense = std::vector<std::vector<Integer>>;

Dense identity_dense(std::size_t n)
{
    Dense d(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
    return d;
}

IntMatrix from_dense(const Dense& d, std::size_t cols) { return IntMatrix::from_dense(d, cols); }

class DenseSmith {
public:
    DenseSmith(Dense a, std::size_t rows, std::size_t cols, bool track)
        : a_(std::move(a)), m_(rows), n_(cols), track_(track)
    {
        if (track_) {
            u_ = identity_dense(m_);
            u_inv_ = identity_dense(m_);
            v_ = identity_dense(n_);
            v_inv_ = identity_dense(n_);
        }
    }

    void run()
    {
        const std::size_t steps = std::min(m_, n_);
        for (std::size_t t = 0; t < steps; ++t) {
            auto pivot = find_pivot(t);
            if (!pivot) break;
            move_to(t, pivot->first, pivot->second);
            reduce_at(t);
            if (a_[t][t] < 0) row_neg(t);
        }
    }

    const Dense& a() const { return a_; }
    const Dense& u() const { return u_; }
    const Dense& u_inv() const { return u_inv_; }
    const Dense& v() const { return v_; }
    const Dense& v_inv() const { return v_inv_; }

private:
    std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = t; i < m_; ++i) {
            for (std::size_t j = t; j < n_; ++j) {
                if (a_[i][j] == 0) continue;
                Integer v = abs(a_[i][j]);
                if (!best || v < best_abs) {
                    best = {i, j};
                    best_abs = v;
                }
            }
        }
        return best;
    }

    void move_to(std::size_t t, std::size_t i, std::size_t j)
    {
        if (i != t) row_swap(t, i);
        if (j != t) col_swap(t, j);
    }

    void reduce_at(std::size_t t)
    {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m_; ++i) {
                if (a_[i][t] == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
                if (q != 0) row_add(i, t, -q);
                if (a_[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n_; ++j) {
                if (a_[t][j] == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
                if (q != 0) col_add(j, t, -q);
                if (a_[t][j] != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; bring the smallest one in.
                std::size_t bi = t, bj = t;
                Integer best = abs(a_[t][t]);
                for (std::size_t i = t + 1; i < m_; ++i)
                    if (a_[i][t] != 0 && abs(a_[i][t]) < best) {
                        best = abs(a_[i][t]);
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n_; ++j)
                    if (a_[t][j] != 0 && abs(a_[t][j]) < best) {
                        best = abs(a_[t][j]);
                        bi = t;
                        bj = j;
                    }
                move_to(t, bi, bj);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < m_ && divides; ++i) {
                for (std::size_t j = t + 1; j < n_; ++j) {
                    if (a_[i][j] == 0) continue;
                    if (!mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
                        row_add(t, i, Integer(1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) return;
        }
    }

    // row_i += k * row_j
    void row_add(std::size_t i, std::size_t j, const Integer& k)
    {
        for (std::size_t c = 0; c < n_; ++c)
            if (a_[j][c] != 0) a_[i][c] += k * a_[j][c];
        if (!track_) return;
        for (std::size_t c = 0; c < m_; ++c)
            if (u_[j][c] != 0) u_[i][c] += k * u_[j][c];
        for (std::size_t r = 0; r < m_; ++r)
            if (u_inv_[r][i] != 0) u_inv_[r][j] -= k * u_inv_[r][i];
    }

    void row_swap(std::size_t i, std::size_t j)
    {
        std::swap(a_[i], a_[j]);
        if (!track_) return;
        std::swap(u_[i], u_[j]);
        for (std::size_t r = 0; r < m_; ++r) std::swap(u_inv_[r][i], u_inv_[r][j]);
    }

    void row_neg(std::size_t i)
    {
        for (auto& x : a_[i]) x = -x;
        if (!track_) return;
        for (auto& x : u_[i]) x = -x;
        for (std::size_t r = 0; r < m_; ++r) u_inv_[r][i] = -u_inv_[r][i];
    }

    // col_i += k * col_j
    void col_add(std::size_t i, std::size_t j, const Integer& k)
    {
        for (std::size_t r = 0; r < m_; ++r)
            if (a_[r][j] != 0) a_[r][i] += k * a_[r][j];
        if (!track_) return;
        for (std::size_t r = 0; r < n_; ++r)
            if (v_[r][j] != 0) v_[r][i] += k * v_[r][j];
        for (std::size_t c = 0; c < n_; ++c)
            if (v_inv_[i][c] != 0) v_inv_[j][c] -= k * v_inv_[i][c];
    }

    void col_swap(std::size_t i, std::size_t j)
    {
        for (std::size_t r = 0; r < m_; ++r) std::swap(a_[r][i], a_[r][j]);
        if (!track_) return;
        for (std::size_t r = 0; r < n_; ++r) std::swap(v_[r][i], v_[r][j]);
        std::swap(v_inv_[i], v_inv_[j]);
    }

    Dense a_;
    std::size_t m_, n_;
    bool track_;
    Dense u_, u_inv_, v_, v_inv_;
};

}  // namespace

std::vector<Integer> SnfResult::diagonal() const
{
    std::vector<Integer> out;
    const std::size_t k = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < k; ++i) {
        Integer v = D.get(i, i);
        if (v == 0) break;
        out.push_back(v);
    }
    return out;
}

SnfResult smith_normal_form(const IntMatrix& a)
{
    DenseSmith s(a.to_dense(), a.rows(), a.cols(), true);
    s.run();
    SnfResult r;
    r.D = from_dense(s.a(), a.cols());
    r.U = from_dense(s.u(), a.rows());
    r.U_inv = from_dense(s.u_inv(), a.rows());
    r.V = from_dense(s.v(), a.cols());
    r.V_inv = from_dense(s.v_inv(), a.cols());
    return r;
}

namespace {

struct Overflow {};

// Scalar policies for the sparse eliminator: machine words with overflow
// detection first, arbitrary precision as the fallback.
struct WordOps {
    using Value = long;
    static Value from(const Integer& z)
    {
        if (!z.fits_slong_p()) throw Overflow{};
        return z.get_si();
    }
    static Integer to_integer(Value v) { return Integer(v); }
    static bool is_unit(Value v) { return v == 1 || v == -1; }
    static Value mul(Value a, Value b)
    {
        Value r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Value sub(Value a, Value b)
    {
        Value r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
};

struct BigOps {
    using Value = Integer;
    static Value from(const Integer& z) { return z; }
    static Integer to_integer(const Value& v) { return v; }
    static bool is_unit(const Value& v) { return v == 1 || v == -1; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
};

// Sparse elimination on ±1 pivots. Each pivot removes one row and one column
// and contributes an invariant factor 1; what remains goes to dense Smith form.
// Columns are processed sparsest first and the pivot row is the unit entry
// whose row is currently sparsest, which keeps fill-in low on boundary matrices.
template <typename Ops>
class UnitEliminator {
public:
    using Value = typename Ops::Value;
    using Entry = std::pair<std::size_t, Value>;
    using Column = std::vector<Entry>;

    explicit UnitEliminator(const IntMatrix& a)
        : rows_(a.rows()), cols_(a.cols()), col_(a.cols()), row_cols_(a.rows()), row_count_(a.rows(), 0),
          col_alive_(a.cols(), 1)
    {
        for (std::size_t c = 0; c < cols_; ++c) {
            for (const auto& [r, v] : a.column(c)) {
                col_[c].emplace_back(r, Ops::from(v));
                row_cols_[r].push_back(c);
                ++row_count_[r];
            }
            queue_.insert({col_[c].size(), c});
        }
    }

    std::vector<Integer> run()
    {
        std::size_t units = 0;
        while (!queue_.empty()) {
            auto [nnz, c] = *queue_.begin();
            queue_.erase(queue_.begin());
            if (!col_alive_[c] || col_[c].empty()) continue;
            std::size_t best_row = rows_;
            std::size_t best_count = 0;
            for (const auto& [r, v] : col_[c]) {
                if (!Ops::is_unit(v)) continue;
                if (best_row == rows_ || row_count_[r] < best_count) {
                    best_row = r;
                    best_count = row_count_[r];
                }
            }
            if (best_row == rows_) continue;  // no unit: left for the dense stage
            eliminate(best_row, c);
            ++units;
        }
        std::vector<Integer> factors(units, Integer(1));
        auto rest = residual_factors();
        factors.insert(factors.end(), rest.begin(), rest.end());
        return factors;
    }

private:
    void eliminate(std::size_t pr, std::size_t pc)
    {
        const Value pv = value_in(pc, pr);  // ±1, so v / pv = v * pv
        const Column pivot_col = col_[pc];
        std::vector<std::size_t> touched = std::move(row_cols_[pr]);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (std::size_t c : touched) {
            if (c == pc || !col_alive_[c]) continue;
            const Value v = value_in(c, pr);
            if (v == 0) continue;
            subtract_multiple(c, pivot_col, Ops::mul(v, pv));
        }
        row_cols_[pr].clear();
        col_alive_[pc] = 0;
        for (const auto& [r, v] : pivot_col) --row_count_[r];
        col_[pc].clear();
    }

    Value value_in(std::size_t c, std::size_t r) const
    {
        const auto& col = col_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::size_t row) { return e.first < row; });
        if (it != col.end() && it->first == r) return it->second;
        return Value(0);
    }

    void subtract_multiple(std::size_t c, const Column& pivot, const Value& factor)
    {
        auto& target = col_[c];
        const std::size_t old_size = target.size();
        Column merged;
        merged.reserve(target.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < target.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
                merged.push_back(std::move(target[i++]));
            } else if (i == target.size() || pivot[j].first < target[i].first) {
                const std::size_t r = pivot[j].first;
                merged.emplace_back(r, Ops::sub(Value(0), Ops::mul(factor, pivot[j].second)));
                row_cols_[r].push_back(c);
                ++row_count_[r];
                ++j;
            } else {
                const std::size_t r = target[i].first;
                Value v = Ops::sub(target[i].second, Ops::mul(factor, pivot[j].second));
                if (v != 0) merged.emplace_back(r, std::move(v));
                else --row_count_[r];
                ++i;
                ++j;
            }
        }
        queue_.erase({old_size, c});
        target = std::move(merged);
        queue_.insert({target.size(), c});
    }

    std::vector<Integer> residual_factors()
    {
        std::vector<std::size_t> live_cols, live_rows;
        for (std::size_t c = 0; c < cols_; ++c)
            if (col_alive_[c] && !col_[c].empty()) live_cols.push_back(c);
        if (live_cols.empty()) return {};
        std::vector<std::ptrdiff_t> row_pos(rows_, -1);
        for (std::size_t c : live_cols)
            for (const auto& [r, v] : col_[c])
                if (row_pos[r] < 0) {
                    row_pos[r] = 0;
                    live_rows.push_back(r);
                }
        std::sort(live_rows.begin(), live_rows.end());
        for (std::size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = static_cast<std::ptrdiff_t>(i);
        Dense d(live_rows.size(), std::vector<Integer>(live_cols.size(), 0));
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (const auto& [r, v] : col_[live_cols[j]])
                d[static_cast<std::size_t>(row_pos[r])][j] = Ops::to_integer(v);
        DenseSmith s(std::move(d), live_rows.size(), live_cols.size(), false);
        s.run();
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(live_rows.size(), live_cols.size()); ++i) {
            if (s.a()[i][i] == 0) break;
            out.push_back(s.a()[i][i]);
        }
        return out;
    }

    std::size_t rows_, cols_;
    std::vector<Column> col_;
    std::vector<std::vector<std::size_t>> row_cols_;
    std::vector<std::size_t> row_count_;
    std::vector<char> col_alive_;
    std::set<std::pair<std::size_t, std::size_t>> queue_;
};

}  // namespace

std::vector<Integer> invariant_factors(const IntMatrix& a)
{
    try {
        return UnitEliminator<WordOps>(a).run();
    } catch (const Overflow&) {
        return UnitEliminator<BigOps>(a).run();
    }
}

std::size_t rational_rank(const IntMatrix& a) { return invariant_factors(a).size(); }

}  // namespace dcoh
