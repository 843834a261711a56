#include "dcoh/bar_resolution.hpp"

namespace dcoh {

namespace {

std::size_t ipow(std::size_t base, int exp)
{
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Degree-n slot count of B^k G (diagonal): n^k copies of G.
std::size_t b_slots(int n, int k) { return ipow(static_cast<std::size_t>(n), k); }

GroupPresentation presentation(const FgAbGroup& g, std::size_t slots)
{
    GroupPresentation p;
    const auto m = g.moduli();
    for (std::size_t s = 0; s < slots; ++s) p.moduli.insert(p.moduli.end(), m.begin(), m.end());
    return p;
}

IntVector column_vector(const IntMatrix& m, std::size_t j)
{
    IntVector v(m.rows(), 0);
    for (const auto& [r, x] : m.column(j)) v[r] = x;
    return v;
}

}  // namespace

BarResolutionData bar_resolution_check(const FgAbGroup& g, int length, int degree_bound)
{
    if (length < 1) throw InputError("bar resolution length must be at least 1");
    if (degree_bound < 0) throw InputError("degree bound must be nonnegative");
    BarResolutionData out;
    out.group = g;
    out.length = length;
    out.degree_bound = degree_bound;
    const std::size_t gens = g.generator_count();
    const IntMatrix id_g = IntMatrix::identity(gens);

    for (int n = 0; n <= degree_bound; ++n) {
        BarResolutionData::Degree deg;
        std::vector<std::size_t> slots;
        // Stage 0 is G; stage k (1..L) is E B^{k-1} G = (n+1) copies of B^{k-1}G_n;
        // stage L+1 is B^L G.
        deg.stage_names.push_back("G");
        slots.push_back(1);
        for (int k = 1; k <= length; ++k) {
            deg.stage_names.push_back(k == 1 ? "EG" : "EB^" + std::to_string(k - 1) + "G");
            slots.push_back((static_cast<std::size_t>(n) + 1) * b_slots(n, k - 1));
        }
        deg.stage_names.push_back("B^" + std::to_string(length) + "G");
        slots.push_back(b_slots(n, length));
        for (auto s : slots) deg.groups.push_back(presentation(g, s));

        // Letter 0 of E(S)_n is the fibre copy of S_n; letters 1..n form B(S)_n.
        for (std::size_t k = 0; k + 1 < slots.size(); ++k) {
            const std::size_t inner = k == 0 ? 1 : b_slots(n, static_cast<int>(k) - 1);
            IntMatrix proj;  // stage k -> B^k G_n
            if (k == 0) proj = IntMatrix::identity(1);
            else {
                proj = IntMatrix(static_cast<std::size_t>(n) * inner, slots[k]);
                for (std::size_t i = 0; i < static_cast<std::size_t>(n) * inner; ++i) proj.set(i, inner + i, 1);
            }
            IntMatrix sigma;
            if (k + 2 == slots.size()) sigma = proj;  // last map: projection only
            else {
                IntMatrix incl(slots[k + 1], proj.rows());
                for (std::size_t i = 0; i < proj.rows(); ++i) incl.set(i, i, 1);
                sigma = incl * proj;
            }
            deg.maps.push_back(PresentedHom{deg.groups[k], deg.groups[k + 1], kronecker(sigma, id_g)});
        }

        auto record = [&](StageCheck c) {
            if (!c.holds) out.exact = false;
            deg.checks.push_back(std::move(c));
        };
        for (std::size_t k = 0; k < deg.maps.size(); ++k)
            record({deg.stage_names[k] + "->" + deg.stage_names[k + 1], "homomorphism", deg.maps[k].well_defined(), {}});
        for (std::size_t k = 0; k + 1 < deg.maps.size(); ++k) {
            const auto comp = compose(deg.maps[k + 1], deg.maps[k]);
            StageCheck c{deg.stage_names[k + 1], "sigma^2 = 0", comp.is_zero(), {}};
            if (!c.holds)
                for (std::size_t j = 0; j < comp.matrix.cols(); ++j)
                    if (!comp.target.is_zero(column_vector(comp.matrix, j))) {
                        c.witness = column_vector(IntMatrix::identity(comp.matrix.cols()), j);
                        break;
                    }
            record(std::move(c));
        }
        {
            const auto& f = deg.maps.front();
            auto escape = lattice_escape(f.kernel_lattice(), f.source.relations());
            record({"G", "injective", !escape, escape});
        }
        for (std::size_t k = 1; k < deg.maps.size(); ++k) {
            auto escape = lattice_escape(deg.maps[k].kernel_lattice(), deg.maps[k - 1].image_lattice());
            record({deg.stage_names[k], "exact", !escape, escape});
        }
        {
            const auto& f = deg.maps.back();
            auto escape = lattice_escape(IntMatrix::identity(f.target.size()), f.image_lattice());
            record({deg.stage_names.back(), "surjective", !escape, escape});
        }
        out.per_degree.push_back(std::move(deg));
    }
    return out;
}

}  // namespace dcoh
