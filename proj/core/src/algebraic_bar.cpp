#include "dcoh/algebraic_bar.hpp"

#include <string>

namespace dcoh {

std::vector<std::size_t> AugmentedDga::basis_in_degree(int n) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (degree(i) == n) out.push_back(i);
    return out;
}

GradedComplex AugmentedDga::chain_complex() const
{
    const int top = max_degree();
    std::vector<std::vector<std::size_t>> basis;
    std::vector<std::size_t> position(size());
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= top; ++n) {
        basis.push_back(basis_in_degree(n));
        const std::size_t offset = n == 0 ? 1 : 0;  // the unit sits first in degree 0
        for (std::size_t k = 0; k < basis.back().size(); ++k) position[basis.back()[k]] = k + offset;
        ranks.push_back(basis.back().size() + offset);
    }
    std::map<int, IntMatrix> diffs;
    for (int n = 1; n <= top; ++n) {
        IntMatrix d(ranks[n - 1], ranks[n]);
        for (std::size_t k = 0; k < basis[n].size(); ++k) {
            IntMatrix::Column col;
            for (const auto& [e, v] : differential(basis[n][k]))
                if (v != 0) col.emplace_back(position[e], v);
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            d.set_column(k, std::move(col));
        }
        diffs[n] = std::move(d);
    }
    return GradedComplex(Ring::Z, Direction::Chain, 0, std::move(ranks), std::move(diffs));
}

namespace {

void add_term(Terms& acc, std::size_t k, const Integer& v)
{
    auto& slot = acc[k];
    slot += v;
    if (slot == 0) acc.erase(k);
}

class GroupRing final : public AugmentedDga {
public:
    explicit GroupRing(long m) : m_(m), zero_diff_(static_cast<std::size_t>(m > 1 ? m - 1 : 0)) {}
    std::size_t size() const override { return static_cast<std::size_t>(m_ - 1); }
    int degree(std::size_t) const override { return 0; }
    int max_degree() const override { return 0; }
    const Terms& differential(std::size_t i) const override { return zero_diff_[i]; }
    Terms product(std::size_t i, std::size_t j) const override
    {
        // (g-1)(h-1) = (gh-1) - (g-1) - (h-1)
        const long g = static_cast<long>(i) + 1, h = static_cast<long>(j) + 1;
        Terms t;
        const long gh = (g + h) % m_;
        if (gh != 0) add_term(t, static_cast<std::size_t>(gh - 1), 1);
        add_term(t, i, -1);
        add_term(t, j, -1);
        return t;
    }
    std::string describe(std::size_t i) const override { return "u" + std::to_string(i + 1); }

private:
    long m_;
    std::vector<Terms> zero_diff_;
};

class Exterior final : public AugmentedDga {
public:
    std::size_t size() const override { return 1; }
    int degree(std::size_t) const override { return 1; }
    int max_degree() const override { return 1; }
    const Terms& differential(std::size_t) const override { return zero_; }
    Terms product(std::size_t, std::size_t) const override { return {}; }
    std::string describe(std::size_t) const override { return "x"; }

private:
    Terms zero_;
};

using Word = std::vector<std::size_t>;

class Bar final : public AugmentedDga {
public:
    Bar(DgaPtr inner, int max_degree, std::size_t budget) : inner_(std::move(inner)), max_degree_(max_degree)
    {
        std::vector<std::size_t> per_degree(static_cast<std::size_t>(max_degree) + 1, 0);
        Word w;
        auto rec = [&](auto&& self, int deg) -> void {
            if (!w.empty()) {
                if (++per_degree[static_cast<std::size_t>(deg)] > budget)
                    throw ResourceError("rank budget exceeded in degree " + std::to_string(deg) +
                                        " of the bar construction (budget " + std::to_string(budget) + ")");
                index_.emplace(w, words_.size());
                words_.push_back(w);
                degrees_.push_back(deg);
            }
            for (std::size_t a = 0; a < inner_->size(); ++a) {
                const int next = deg + inner_->degree(a) + 1;
                if (next > max_degree_) continue;
                w.push_back(a);
                self(self, next);
                w.pop_back();
            }
        };
        rec(rec, 0);
        diffs_.reserve(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) diffs_.push_back(compute_differential(words_[i]));
    }

    std::size_t size() const override { return words_.size(); }
    int degree(std::size_t i) const override { return degrees_[i]; }
    int max_degree() const override { return max_degree_; }
    const Terms& differential(std::size_t i) const override { return diffs_[i]; }

    Terms product(std::size_t i, std::size_t j) const override
    {
        {
            std::lock_guard lock(mutex_);
            auto it = products_.find({i, j});
            if (it != products_.end()) return it->second;
        }
        Terms t;
        if (degrees_[i] + degrees_[j] <= max_degree_) {
            Word out;
            shuffle(words_[i], 0, words_[j], 0, out, 1, t);
        }
        std::lock_guard lock(mutex_);
        products_.emplace(std::make_pair(i, j), t);
        return t;
    }

    std::string describe(std::size_t i) const override
    {
        std::string s = "[";
        for (std::size_t k = 0; k < words_[i].size(); ++k) {
            if (k) s += "|";
            s += inner_->describe(words_[i][k]);
        }
        return s + "]";
    }

private:
    int shifted(std::size_t letter) const { return inner_->degree(letter) + 1; }

    void add_word(Terms& t, const Word& w, const Integer& v) const
    {
        auto it = index_.find(w);
        if (it == index_.end()) throw InvariantError("bar word outside the truncation");
        add_term(t, it->second, v);
    }

    // d[a_1|...|a_k] = -Σ_i (-1)^{ε_i} [..|da_i|..] + Σ_{i≥2} (-1)^{ε_i} [..|a_{i-1}a_i|..],
    // ε_i the total shifted degree of the letters before a_i.
    Terms compute_differential(const Word& w) const
    {
        Terms t;
        int eps = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Integer sign = (eps % 2 == 0) ? 1 : -1;
            for (const auto& [b, v] : inner_->differential(w[i])) {
                Word u = w;
                u[i] = b;
                add_word(t, u, -sign * v);
            }
            if (i >= 1) {
                for (const auto& [b, v] : inner_->product(w[i - 1], w[i])) {
                    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) - 1);
                    u.push_back(b);
                    u.insert(u.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                    add_word(t, u, sign * v);
                }
            }
            eps += shifted(w[i]);
        }
        return t;
    }

    // Σ over shuffles with the Koszul sign of the shifted letters.
    void shuffle(const Word& x, std::size_t i, const Word& y, std::size_t j, Word& out, int sign, Terms& acc) const
    {
        if (i == x.size() && j == y.size()) {
            add_word(acc, out, sign);
            return;
        }
        if (i < x.size()) {
            out.push_back(x[i]);
            shuffle(x, i + 1, y, j, out, sign, acc);
            out.pop_back();
        }
        if (j < y.size()) {
            int rest = 0;
            for (std::size_t k = i; k < x.size(); ++k) rest += shifted(x[k]);
            const int s = ((rest * shifted(y[j])) % 2 == 0) ? sign : -sign;
            out.push_back(y[j]);
            shuffle(x, i, y, j + 1, out, s, acc);
            out.pop_back();
        }
    }

    DgaPtr inner_;
    int max_degree_;
    std::vector<Word> words_;
    std::vector<int> degrees_;
    std::map<Word, std::size_t> index_;
    std::vector<Terms> diffs_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, Terms> products_;
};

}  // namespace

DgaPtr group_ring(long m)
{
    if (m < 2) throw InputError("group ring needs a cyclic group of order at least 2");
    return std::make_shared<GroupRing>(m);
}

DgaPtr exterior_circle() { return std::make_shared<Exterior>(); }

DgaPtr bar_construction(DgaPtr inner, int max_degree, std::size_t budget)
{
    return std::make_shared<Bar>(std::move(inner), max_degree, budget);
}

}  // namespace dcoh
