#include "dcoh/em_homology.hpp"

#include "dcoh/homology.hpp"

namespace dcoh {

namespace {

/// Degrees lo..top of a chain complex (dropping the top of a chain complex
/// keeps d∘d = 0).
GradedComplex truncate_above(const GradedComplex& c, int top)
{
    std::vector<std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    for (int n = c.lo(); n <= std::min(top, c.hi()); ++n) {
        ranks.push_back(c.rank(n));
        if (n > c.lo()) diffs[n] = c.differential(n);
    }
    return GradedComplex(c.ring(), Direction::Chain, c.lo(), std::move(ranks), std::move(diffs));
}

GradedComplex cyclic_model(const Integer& order, int s, int top, std::size_t budget)
{
    // Each bar step raises connectivity by one, so B^k needs degrees up to top - (s - k).
    DgaPtr dga;
    int steps = s;
    if (order == 0) {
        dga = exterior_circle();
        --steps;
    } else {
        if (!order.fits_slong_p()) throw ResourceError("cyclic order too large");
        dga = group_ring(order.get_si());
    }
    for (int k = 1; k <= steps; ++k) dga = bar_construction(dga, top - (steps - k), budget);
    if (dga->max_degree() < top) {
        // Λ[x] with s = 1: nothing above degree 1.
        auto c = dga->chain_complex();
        std::vector<std::size_t> ranks;
        std::map<int, IntMatrix> diffs;
        for (int n = 0; n <= top; ++n) {
            ranks.push_back(c.rank(n));
            if (n >= 1) diffs[n] = c.differential(n);
        }
        return GradedComplex(Ring::Z, Direction::Chain, 0, std::move(ranks), std::move(diffs));
    }
    return dga->chain_complex();
}

}  // namespace

GradedComplex em_chain_model(const FgAbGroup& a, int s, int top, std::size_t budget)
{
    if (s < 1) throw InputError("em_homology needs s >= 1");
    if (top < 0) throw InputError("degree bound must be nonnegative");
    GradedComplex total;
    bool first = true;
    std::vector<Integer> orders = a.torsion;
    orders.insert(orders.end(), a.free_rank, Integer(0));
    if (orders.empty()) {
        std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
        ranks[0] = 1;
        return GradedComplex(Ring::Z, Direction::Chain, 0, std::move(ranks), {});
    }
    for (const auto& m : orders) {
        GradedComplex factor = cyclic_model(m, s, top, budget);
        total = first ? factor : truncate_above(tensor_product(total, factor), top);
        first = false;
        for (int n = 0; n <= top; ++n)
            if (total.rank(n) > budget)
                throw ResourceError("rank budget exceeded in degree " + std::to_string(n) + " (" +
                                    std::to_string(total.rank(n)) + " > " + std::to_string(budget) + ")");
    }
    return total;
}

std::vector<FgAbGroup> em_homology(const FgAbGroup& a, int s, int n, std::size_t budget)
{
    const auto h = homology(em_chain_model(a, s, n + 1, budget));
    std::vector<FgAbGroup> out;
    for (int k = 0; k <= n; ++k) out.push_back(h.group(k));
    return out;
}

std::vector<FgAbGroup> em_homology_diagonal(const FgAbGroup& a, int s, int n, std::size_t budget)
{
    const auto chains = normalized_chains(iterate_b(a, s, n + 1), budget);
    const auto h = homology(chains);
    std::vector<FgAbGroup> out;
    for (int k = 0; k <= n; ++k) out.push_back(h.group(k));
    return out;
}

}  // namespace dcoh
