#include "dcoh/homology.hpp"

#include "dcoh/linear_solve.hpp"
#include "dcoh/smith.hpp"

#include <string>

namespace dcoh {

namespace {

DegreeHomology integral_with_generators(const GradedComplex& c, int n)
{
    DegreeHomology out;
    const std::size_t dim = c.rank(n);
    const IntMatrix d_out = c.differential(n);
    const IntMatrix d_in = c.differential(c.source_into(n));

    IntMatrix kernel_basis = IntMatrix::identity(dim);
    IntMatrix kernel_coords = IntMatrix::identity(dim);
    if (d_out.rows() > 0 && dim > 0) {
        const SnfResult s = smith_normal_form(d_out);
        const std::size_t r = s.diagonal().size();
        std::vector<std::size_t> keep;
        for (std::size_t j = r; j < dim; ++j) keep.push_back(j);
        kernel_basis = s.V.select_cols(keep);
        kernel_coords = s.V_inv.select_rows(keep);
    }
    const std::size_t k = kernel_basis.cols();
    const IntMatrix image = kernel_coords * d_in;  // k × rank(in)
    IntMatrix basis_change = IntMatrix::identity(k);
    IntMatrix basis_change_inv = IntMatrix::identity(k);
    std::vector<Integer> diag;
    if (image.cols() > 0 && k > 0) {
        const SnfResult s = smith_normal_form(image);
        basis_change = s.U;
        basis_change_inv = s.U_inv;
        diag = s.diagonal();
    }
    diag.resize(k, Integer(0));

    const IntMatrix gens = kernel_basis * basis_change_inv;
    std::vector<IntVector> torsion_gens, free_gens;
    for (std::size_t i = 0; i < k; ++i) {
        if (diag[i] == 1) continue;
        IntVector g(dim, 0);
        for (const auto& [r, v] : gens.column(i)) g[r] = v;
        if (diag[i] == 0) {
            free_gens.push_back(std::move(g));
            ++out.group.free_rank;
        } else {
            torsion_gens.push_back(std::move(g));
            out.group.torsion.push_back(diag[i]);
        }
    }
    out.generators = std::move(torsion_gens);
    out.generators.insert(out.generators.end(), free_gens.begin(), free_gens.end());
    out.kernel_coords = std::move(kernel_coords);
    out.basis_change = std::move(basis_change);
    out.divisors = std::move(diag);
    out.outgoing = d_out;
    return out;
}

DegreeHomology integral_groups_only(const GradedComplex& c, int n)
{
    DegreeHomology out;
    const std::size_t dim = c.rank(n);
    const auto out_factors = invariant_factors(c.differential(n));
    const auto in_factors = invariant_factors(c.differential(c.source_into(n)));
    out.group.free_rank = dim - out_factors.size() - in_factors.size();
    for (const auto& d : in_factors)
        if (d != 1) out.group.torsion.push_back(d);
    return out;
}

DegreeHomology rational_homology(const GradedComplex& c, int n, bool with_generators)
{
    DegreeHomology out;
    const std::size_t dim = c.rank(n);
    const IntMatrix d_out = c.differential(n);
    const IntMatrix d_in = c.differential(c.source_into(n));
    const std::size_t r_out = rational_rank(d_out);
    const std::size_t r_in = rational_rank(d_in);
    out.group.free_rank = dim - r_out - r_in;
    if (!with_generators || out.group.free_rank == 0) return out;

    // Greedily extend a basis of the image by kernel vectors.
    const RatMatrix kernel = rational_kernel(to_rational(d_out));
    RatMatrix span = to_rational(d_in);
    std::size_t span_rank = r_in;
    for (std::size_t j = 0; j < kernel.cols() && out.generators.size() < out.group.free_rank; ++j) {
        RatMatrix trial(dim, span.cols() + 1);
        trial.place(span, 0, 0);
        for (const auto& [r, v] : kernel.column(j)) trial.set(r, span.cols(), v);
        const std::size_t tr = pivot_columns(trial).size();
        if (tr == span_rank) continue;
        span = std::move(trial);
        span_rank = tr;
        Integer lcm = 1;
        for (const auto& [r, v] : kernel.column(j)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        IntVector g(dim, 0);
        for (const auto& [r, v] : kernel.column(j)) g[r] = Rational(v * lcm).get_num();
        out.generators.push_back(std::move(g));
    }
    return out;
}

}  // namespace

const FgAbGroup& HomologyResult::group(int degree) const
{
    static const FgAbGroup zero;
    auto it = degrees.find(degree);
    return it == degrees.end() ? zero : it->second.group;
}

std::vector<FgAbGroup> HomologyResult::groups() const
{
    std::vector<FgAbGroup> out;
    for (const auto& [n, h] : degrees) out.push_back(h.group);
    return out;
}

IntVector HomologyResult::coordinates(int degree, const IntVector& cycle) const
{
    if (!with_generators || ring != Ring::Z)
        throw InvariantError("coordinates require integral homology with generators");
    auto it = degrees.find(degree);
    if (it == degrees.end()) return {};
    const DegreeHomology& h = it->second;
    if (cycle.size() != h.outgoing.cols()) throw InputError("cycle has wrong length for degree " + std::to_string(degree));
    if (!is_zero(h.outgoing.apply(cycle))) throw InvariantError("not a cycle in degree " + std::to_string(degree));
    const IntVector y = h.kernel_coords.apply(cycle);
    const IntVector s = h.basis_change.apply(y);
    IntVector torsion, free;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (h.divisors[i] == 1) continue;
        if (h.divisors[i] == 0) free.push_back(s[i]);
        else torsion.push_back(mod_floor(s[i], h.divisors[i]));
    }
    torsion.insert(torsion.end(), free.begin(), free.end());
    return torsion;
}

HomologyResult homology(const GradedComplex& c, bool with_generators)
{
    HomologyResult out;
    out.ring = c.ring();
    out.with_generators = with_generators;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (c.ring() == Ring::Q) out.degrees[n] = rational_homology(c, n, with_generators);
        else if (with_generators) out.degrees[n] = integral_with_generators(c, n);
        else out.degrees[n] = integral_groups_only(c, n);
    }
    return out;
}

std::size_t betti_number(const GradedComplex& c, int degree)
{
    return c.rank(degree) - rational_rank(c.differential(degree)) -
           rational_rank(c.differential(c.source_into(degree)));
}

}  // namespace dcoh
