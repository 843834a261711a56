#include "dcoh/set_chains.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace dcoh {

namespace {

struct ElementHash {
    std::size_t operator()(const SimplexElement& e) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : e) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
        return h;
    }
};

/// Hard cap on how many raw tuples the generic model may scan.
constexpr double kScanLimit = 5.0e7;

class ChainBuilder {
public:
    ChainBuilder(const SimAbGroup& s, std::size_t budget) : s_(s), budget_(budget)
    {
        for (const auto& m : s.base().moduli()) {
            if (m > 1000000) throw ResourceError("torsion order too large for set-level chains");
            moduli_.push_back(m.get_si());
        }
        gens_ = moduli_.size();
    }

    NormalizedChains run()
    {
        const int top = s_.degree_bound();
        NormalizedChains out;
        for (int n = 0; n <= top; ++n) {
            out.basis.push_back(enumerate(n));
            auto& idx = index_.emplace_back();
            for (std::size_t i = 0; i < out.basis[n].size(); ++i) idx.emplace(out.basis[n][i], i);
        }
        std::vector<std::size_t> ranks;
        for (const auto& b : out.basis) ranks.push_back(b.size());
        std::map<int, IntMatrix> diffs;
        for (int n = 1; n <= top; ++n) diffs[n] = boundary(n, out.basis[n]);
        out.complex = GradedComplex(Ring::Z, Direction::Chain, 0, std::move(ranks), std::move(diffs));
        return out;
    }

private:
    SimplexElement apply(const IntMatrix& m, const SimplexElement& x) const
    {
        SimplexElement y(m.rows() * gens_, 0);
        for (std::size_t k = 0; k < m.cols(); ++k)
            for (const auto& [o, v] : m.column(k)) {
                const long coef = v.get_si();
                for (std::size_t c = 0; c < gens_; ++c) y[o * gens_ + c] += coef * x[k * gens_ + c];
            }
        reduce(y);
        return y;
    }

    void reduce(SimplexElement& y) const
    {
        for (std::size_t i = 0; i < y.size(); ++i) {
            const long m = moduli_[i % gens_];
            if (m > 0) y[i] = ((y[i] % m) + m) % m;
        }
    }

    bool degenerate(int n, const SimplexElement& x) const
    {
        for (int j = 0; j < n; ++j)
            if (apply(s_.degeneracy(n - 1, j), apply(s_.face(n, j), x)) == x) return true;
        return false;
    }

    [[noreturn]] void over_budget(int n, double count) const
    {
        throw ResourceError("rank budget exceeded in degree " + std::to_string(n) + ": about " +
                            std::to_string(static_cast<long long>(count)) + " nondegenerate simplices, budget " +
                            std::to_string(budget_));
    }

    void push(int n, std::vector<SimplexElement>& out, SimplexElement e) const
    {
        out.push_back(std::move(e));
        if (out.size() > budget_) over_budget(n, static_cast<double>(out.size()));
    }

    /// Window values of one generator: all residues for torsion, a small
    /// interval for free coordinates.
    std::vector<long> values(std::size_t c, long lo, long hi) const
    {
        std::vector<long> v;
        if (moduli_[c] > 0)
            for (long a = 0; a < moduli_[c]; ++a) v.push_back(a);
        else
            for (long a = lo; a <= hi; ++a) v.push_back(a);
        return v;
    }

    std::vector<SimplexElement> window_points(long lo, long hi) const
    {
        std::vector<SimplexElement> pts{SimplexElement{}};
        for (std::size_t c = 0; c < gens_; ++c) {
            std::vector<SimplexElement> next;
            for (const auto& p : pts)
                for (long a : values(c, lo, hi)) {
                    auto q = p;
                    q.push_back(a);
                    next.push_back(std::move(q));
                }
            pts = std::move(next);
        }
        return pts;
    }

    std::vector<SimplexElement> enumerate(int n) const
    {
        switch (s_.model()) {
        case BarModel::E: return enumerate_e(n);
        case BarModel::B: return enumerate_b(n);
        case BarModel::Generic: break;
        }
        return enumerate_generic(n);
    }

    /// Homogeneous sequences g_0..g_n of window points with g_i ≠ g_{i-1},
    /// written back in letters h_0 = g_0, h_i = g_i - g_{i-1}.
    std::vector<SimplexElement> enumerate_e(int n) const
    {
        const auto pts = window_points(0, 1);
        const double w = static_cast<double>(pts.size());
        double estimate = w;
        for (int k = 0; k < n; ++k) estimate *= (w - 1);
        if (estimate > static_cast<double>(budget_)) over_budget(n, estimate);
        std::vector<SimplexElement> out;
        std::vector<std::size_t> seq;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(seq.size()) == n + 1) {
                SimplexElement e;
                for (std::size_t k = 0; k < seq.size(); ++k)
                    for (std::size_t c = 0; c < gens_; ++c)
                        e.push_back(pts[seq[k]][c] - (k == 0 ? 0 : pts[seq[k - 1]][c]));
                reduce(e);
                push(n, out, std::move(e));
                return;
            }
            for (std::size_t p = 0; p < pts.size(); ++p) {
                if (!seq.empty() && seq.back() == p) continue;
                seq.push_back(p);
                self(self);
                seq.pop_back();
            }
        };
        rec(rec);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Letter sequences of nonzero letters whose partial-sum walk has
    /// diameter ≤ 1 in every free coordinate.
    std::vector<SimplexElement> enumerate_b(int n) const
    {
        auto letters = window_points(-1, 1);
        letters.erase(std::remove_if(letters.begin(), letters.end(),
                                     [](const SimplexElement& e) {
                                         return std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
                                     }),
                      letters.end());
        std::vector<SimplexElement> out;
        SimplexElement cur;
        std::vector<long> walk(gens_, 0), lo(gens_, 0), hi(gens_, 0);
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                push(n, out, cur);
                return;
            }
            for (const auto& h : letters) {
                auto saved_walk = walk, saved_lo = lo, saved_hi = hi;
                bool ok = true;
                for (std::size_t c = 0; c < gens_ && ok; ++c) {
                    if (moduli_[c] > 0) continue;
                    walk[c] += h[c];
                    lo[c] = std::min(lo[c], walk[c]);
                    hi[c] = std::max(hi[c], walk[c]);
                    ok = hi[c] - lo[c] <= 1;
                }
                if (ok) {
                    cur.insert(cur.end(), h.begin(), h.end());
                    self(self, depth + 1);
                    cur.resize(cur.size() - gens_);
                }
                walk = std::move(saved_walk);
                lo = std::move(saved_lo);
                hi = std::move(saved_hi);
            }
        };
        rec(rec, 0);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<SimplexElement> enumerate_generic(int n) const
    {
        if (!s_.base().is_finite())
            throw ResourceError("set-level chains of " + s_.label() +
                                " are infinite (free summands are only windowed for E and B of a constant group)");
        const std::size_t len = s_.slots(n) * gens_;
        double total = 1;
        for (std::size_t i = 0; i < len; ++i) total *= static_cast<double>(moduli_[i % gens_]);
        if (total > kScanLimit) over_budget(n, total);
        std::vector<SimplexElement> out;
        SimplexElement e(len, 0);
        while (true) {
            if (!degenerate(n, e)) push(n, out, e);
            std::size_t i = 0;
            while (i < len) {
                if (++e[i] < moduli_[i % gens_]) break;
                e[i] = 0;
                ++i;
            }
            if (i == len) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    IntMatrix boundary(int n, const std::vector<SimplexElement>& cells) const
    {
        IntMatrix d(index_[static_cast<std::size_t>(n) - 1].size(), cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            std::map<std::size_t, long> acc;
            for (int i = 0; i <= n; ++i) {
                SimplexElement y = apply(s_.face(n, i), cells[j]);
                if (degenerate(n - 1, y)) continue;
                auto it = index_[static_cast<std::size_t>(n) - 1].find(y);
                if (it == index_[static_cast<std::size_t>(n) - 1].end())
                    throw InvariantError("face of a window simplex left the window in degree " + std::to_string(n));
                acc[it->second] += (i % 2 == 0) ? 1 : -1;
            }
            IntMatrix::Column col;
            for (const auto& [r, v] : acc)
                if (v != 0) col.emplace_back(r, Integer(v));
            d.set_column(j, std::move(col));
        }
        return d;
    }

    const SimAbGroup& s_;
    std::size_t budget_;
    std::vector<long> moduli_;
    std::size_t gens_ = 0;
    std::vector<std::unordered_map<SimplexElement, std::size_t, ElementHash>> index_;
};

}  // namespace

NormalizedChains normalized_chains_with_basis(const SimAbGroup& s, std::size_t budget)
{
    s.check_identities();
    return ChainBuilder(s, budget).run();
}

GradedComplex normalized_chains(const SimAbGroup& s, std::size_t budget)
{
    return normalized_chains_with_basis(s, budget).complex;
}

}  // namespace dcoh
