#include "dcoh/graded_complex.hpp"

#include <algorithm>
#include <string>

namespace dcoh {

GradedComplex::GradedComplex(Ring ring, Direction direction, int lo, std::vector<std::size_t> ranks,
                             std::map<int, IntMatrix> differentials)
    : ring_(ring), direction_(direction), lo_(lo), ranks_(std::move(ranks)), diff_(std::move(differentials))
{
    for (auto it = diff_.begin(); it != diff_.end();) {
        const int n = it->first;
        const IntMatrix& d = it->second;
        if (d.cols() != rank(n) || d.rows() != rank(target(n)))
            throw InvariantError("differential from degree " + std::to_string(n) + " has shape " +
                                 std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                                 std::to_string(rank(target(n))) + "x" + std::to_string(rank(n)));
        if (d.is_zero()) it = diff_.erase(it);
        else ++it;
    }
    for (const auto& [n, d] : diff_) {
        auto next = diff_.find(target(n));
        if (next == diff_.end()) continue;
        if (!(next->second * d).is_zero())
            throw InvariantError("d∘d != 0 at degree " + std::to_string(n));
    }
}

std::size_t GradedComplex::rank(int degree) const
{
    if (degree < lo_ || degree > hi()) return 0;
    return ranks_[static_cast<std::size_t>(degree - lo_)];
}

IntMatrix GradedComplex::differential(int degree) const
{
    auto it = diff_.find(degree);
    if (it != diff_.end()) return it->second;
    return IntMatrix(rank(target(degree)), rank(degree));
}

long long GradedComplex::euler_characteristic() const
{
    long long chi = 0;
    for (int n = lo_; n <= hi(); ++n) {
        const auto r = static_cast<long long>(rank(n));
        chi += (n % 2 == 0) ? r : -r;
    }
    return chi;
}

GradedComplex GradedComplex::with_ring(Ring ring) const
{
    GradedComplex c = *this;
    c.ring_ = ring;
    return c;
}

IntMatrix ChainMap::at(int degree) const
{
    auto it = components.find(degree);
    if (it != components.end()) return it->second;
    return IntMatrix(target.rank(degree), source.rank(degree));
}

bool ChainMap::commutes() const
{
    if (source.direction() != target.direction()) return false;
    const int lo = std::min(source.lo(), target.lo());
    const int hi = std::max(source.hi(), target.hi());
    for (int n = lo; n <= hi; ++n) {
        const int t = source.target(n);
        const IntMatrix f_n = at(n);
        const IntMatrix f_t = at(t);
        if (f_n.rows() != target.rank(n) || f_n.cols() != source.rank(n)) return false;
        if (!(target.differential(n) * f_n == f_t * source.differential(n))) return false;
    }
    return true;
}

MappingCone mapping_cone(const ChainMap& f)
{
    const GradedComplex& a = f.source;
    const GradedComplex& b = f.target;
    if (a.direction() != b.direction()) throw InvariantError("mapping cone: mixed directions");
    if (!f.commutes()) throw InvariantError("mapping cone: input is not a chain map");
    const bool cochain = a.direction() == Direction::Cochain;
    auto shift = [&](int n) { return cochain ? n + 1 : n - 1; };
    // Cone degree n contains A at shift(n), so A_k appears in cone degree k ∓ 1.
    const int a_lo = cochain ? a.lo() - 1 : a.lo() + 1;
    const int a_hi = cochain ? a.hi() - 1 : a.hi() + 1;
    const int lo = std::min(a_lo, b.lo());
    const int hi = std::max(a_hi, b.hi());

    MappingCone out;
    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) {
        out.a_block[n] = a.rank(shift(n));
        ranks.push_back(a.rank(shift(n)) + b.rank(n));
    }
    auto cone_rank = [&](int n) { return (n < lo || n > hi) ? std::size_t{0} : ranks[static_cast<std::size_t>(n - lo)]; };

    std::map<int, IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        const int t = cochain ? n + 1 : n - 1;
        IntMatrix d(cone_rank(t), cone_rank(n));
        if (d.rows() == 0 || d.cols() == 0) continue;
        const std::size_t a_src = a.rank(shift(n));
        const std::size_t a_dst = a.rank(shift(t));
        const IntMatrix da = a.differential(shift(n));
        if (a_dst > 0 && a_src > 0) d.place(da, 0, 0, -1);
        const IntMatrix fa = f.at(shift(n));
        if (b.rank(t) > 0 && a_src > 0) d.place(fa, a_dst, 0, 1);
        const IntMatrix db = b.differential(n);
        if (b.rank(t) > 0 && b.rank(n) > 0) d.place(db, a_dst, a_src, 1);
        diffs[n] = std::move(d);
    }
    out.complex = GradedComplex(a.ring(), a.direction(), lo, std::move(ranks), std::move(diffs));
    return out;
}

std::size_t DoubleComplex::rank(int r, int s) const
{
    if (r < r_lo || r > r_hi() || s < s_lo || s > s_hi()) return 0;
    return ranks[static_cast<std::size_t>(r - r_lo)][static_cast<std::size_t>(s - s_lo)];
}

IntMatrix DoubleComplex::h(int r, int s) const
{
    auto it = horizontal.find({r, s});
    if (it != horizontal.end()) return it->second;
    return IntMatrix(rank(r + 1, s), rank(r, s));
}

IntMatrix DoubleComplex::v(int r, int s) const
{
    auto it = vertical.find({r, s});
    if (it != vertical.end()) return it->second;
    return IntMatrix(rank(r, s + 1), rank(r, s));
}

GradedComplex total_complex(const DoubleComplex& dc)
{
    if (dc.ranks.empty()) return GradedComplex(dc.ring, Direction::Cochain, 0, {}, {});
    for (int r = dc.r_lo; r <= dc.r_hi(); ++r) {
        for (int s = dc.s_lo; s <= dc.s_hi(); ++s) {
            const IntMatrix& hv = dc.h(r, s + 1) * dc.v(r, s);
            const IntMatrix& vh = dc.v(r + 1, s) * dc.h(r, s);
            if (!(hv == vh))
                throw InvariantError("double complex square at (" + std::to_string(r) + "," + std::to_string(s) +
                                     ") does not commute");
        }
    }
    const int lo = dc.r_lo + dc.s_lo;
    const int hi = dc.r_hi() + dc.s_hi();
    // offsets[m][r] = position of block (r, m - r) inside Tot^m.
    std::map<int, std::map<int, std::size_t>> offsets;
    std::vector<std::size_t> ranks;
    for (int m = lo; m <= hi; ++m) {
        std::size_t total = 0;
        for (int r = dc.r_lo; r <= dc.r_hi(); ++r) {
            offsets[m][r] = total;
            total += dc.rank(r, m - r);
        }
        ranks.push_back(total);
    }
    std::map<int, IntMatrix> diffs;
    for (int m = lo; m < hi; ++m) {
        IntMatrix d(ranks[static_cast<std::size_t>(m + 1 - lo)], ranks[static_cast<std::size_t>(m - lo)]);
        for (int r = dc.r_lo; r <= dc.r_hi(); ++r) {
            const int s = m - r;
            if (dc.rank(r, s) == 0) continue;
            if (dc.rank(r + 1, s) > 0) d.place(dc.h(r, s), offsets[m + 1][r + 1], offsets[m][r], 1);
            if (dc.rank(r, s + 1) > 0) d.place(dc.v(r, s), offsets[m + 1][r], offsets[m][r], (r % 2 == 0) ? 1 : -1);
        }
        diffs[m] = std::move(d);
    }
    return GradedComplex(dc.ring, Direction::Cochain, lo, std::move(ranks), std::move(diffs));
}

GradedComplex tensor_product(const GradedComplex& a, const GradedComplex& b)
{
    if (a.direction() != b.direction()) throw InvariantError("tensor product: mixed directions");
    if (a.empty() || b.empty()) return GradedComplex(a.ring(), a.direction(), 0, {}, {});
    const int lo = a.lo() + b.lo();
    const int hi = a.hi() + b.hi();
    std::map<int, std::map<int, std::size_t>> offsets;
    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) {
        std::size_t total = 0;
        for (int i = a.lo(); i <= a.hi(); ++i) {
            offsets[n][i] = total;
            total += a.rank(i) * b.rank(n - i);
        }
        ranks.push_back(total);
    }
    auto rank_at = [&](int n) { return (n < lo || n > hi) ? std::size_t{0} : ranks[static_cast<std::size_t>(n - lo)]; };
    std::map<int, IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        const int t = a.target(n);
        if (rank_at(t) == 0 || rank_at(n) == 0) continue;
        IntMatrix d(rank_at(t), rank_at(n));
        for (int i = a.lo(); i <= a.hi(); ++i) {
            const int j = n - i;
            if (a.rank(i) == 0 || b.rank(j) == 0) continue;
            const int ti = a.target(i);
            const int tj = b.target(j);
            if (a.rank(ti) > 0) {
                IntMatrix block = kronecker(a.differential(i), IntMatrix::identity(b.rank(j)));
                d.place(block, offsets[t][ti], offsets[n][i], 1);
            }
            if (b.rank(tj) > 0) {
                IntMatrix block = kronecker(IntMatrix::identity(a.rank(i)), b.differential(j));
                d.place(block, offsets[t][i], offsets[n][i], (i % 2 == 0) ? 1 : -1);
            }
        }
        diffs[n] = std::move(d);
    }
    return GradedComplex(a.ring(), a.direction(), lo, std::move(ranks), std::move(diffs));
}

}  // namespace dcoh
