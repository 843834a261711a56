#include "dcoh/lattice.hpp"

#include "dcoh/linear_solve.hpp"
#include "dcoh/smith.hpp"

namespace dcoh {

IntMatrix GroupPresentation::relations() const
{
    std::size_t count = 0;
    for (const auto& m : moduli)
        if (m != 0) ++count;
    IntMatrix r(moduli.size(), count);
    std::size_t c = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i] != 0) r.set(i, c++, moduli[i]);
    return r;
}

IntVector GroupPresentation::reduce(IntVector v) const
{
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i] != 0) v[i] = mod_floor(v[i], moduli[i]);
    return v;
}

bool GroupPresentation::is_zero(const IntVector& v) const { return dcoh::is_zero(reduce(v)); }

bool PresentedHom::well_defined() const
{
    for (std::size_t j = 0; j < source.size(); ++j) {
        const Integer& m = source.moduli[j];
        for (const auto& [i, v] : matrix.column(j)) {
            const Integer image = v * m;
            const Integer& t = target.moduli[i];
            if (t == 0 ? image != 0 : !mpz_divisible_p(image.get_mpz_t(), t.get_mpz_t())) return false;
        }
    }
    return true;
}

bool PresentedHom::is_zero() const
{
    bool zero = true;
    matrix.for_each([&](std::size_t i, std::size_t, const Integer& v) {
        const Integer& t = target.moduli[i];
        if (t == 0 ? v != 0 : !mpz_divisible_p(v.get_mpz_t(), t.get_mpz_t())) zero = false;
    });
    return zero;
}

IntMatrix PresentedHom::image_lattice() const
{
    const IntMatrix rel = target.relations();
    IntMatrix out(target.size(), matrix.cols() + rel.cols());
    out.place(matrix, 0, 0);
    out.place(rel, 0, matrix.cols());
    return out;
}

IntMatrix PresentedHom::kernel_lattice() const
{
    const IntMatrix rel = target.relations();
    IntMatrix joint(target.size(), matrix.cols() + rel.cols());
    joint.place(matrix, 0, 0);
    joint.place(rel, 0, matrix.cols());
    const IntMatrix k = integer_kernel(joint);
    std::vector<std::size_t> head;
    for (std::size_t i = 0; i < matrix.cols(); ++i) head.push_back(i);
    const IntMatrix projected = k.select_rows(head);
    const IntMatrix src_rel = source.relations();
    IntMatrix out(source.size(), projected.cols() + src_rel.cols());
    out.place(projected, 0, 0);
    out.place(src_rel, 0, projected.cols());
    return out;
}

PresentedHom compose(const PresentedHom& g, const PresentedHom& f)
{
    return PresentedHom{f.source, g.target, g.matrix * f.matrix};
}

std::optional<IntVector> lattice_escape(const IntMatrix& sub, const IntMatrix& super)
{
    if (super.cols() == 0) {
        for (std::size_t j = 0; j < sub.cols(); ++j) {
            if (sub.column(j).empty()) continue;
            IntVector v(sub.rows(), 0);
            for (const auto& [r, x] : sub.column(j)) v[r] = x;
            return v;
        }
        return std::nullopt;
    }
    const SnfResult snf = smith_normal_form(super);
    const auto diag = snf.diagonal();
    for (std::size_t j = 0; j < sub.cols(); ++j) {
        IntVector v(sub.rows(), 0);
        for (const auto& [r, x] : sub.column(j)) v[r] = x;
        const IntVector uv = snf.U.apply(v);
        for (std::size_t i = 0; i < uv.size(); ++i) {
            const bool ok = i < diag.size() ? mpz_divisible_p(uv[i].get_mpz_t(), diag[i].get_mpz_t()) != 0
                                            : uv[i] == 0;
            if (!ok) return v;
        }
    }
    return std::nullopt;
}

}  // namespace dcoh
