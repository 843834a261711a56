#include "dcoh/sim_ab_group.hpp"

#include <string>

namespace dcoh {

SimAbGroup::SimAbGroup(FgAbGroup base, std::vector<std::size_t> slot_counts, std::vector<std::vector<IntMatrix>> faces,
                       std::vector<std::vector<IntMatrix>> degeneracies, BarModel model, std::string label)
    : base_(std::move(base)), slots_(std::move(slot_counts)), faces_(std::move(faces)), degens_(std::move(degeneracies)),
      model_(model), label_(std::move(label))
{
    if (slots_.empty()) throw InputError("simplicial group needs degree 0");
    const int top = degree_bound();
    if (static_cast<int>(faces_.size()) != top + 1 || static_cast<int>(degens_.size()) != top)
        throw InputError("face/degeneracy tables do not match the degree bound");
    for (int n = 1; n <= top; ++n) {
        if (static_cast<int>(faces_[n].size()) != n + 1) throw InputError("wrong number of faces");
        for (const auto& f : faces_[n])
            if (f.rows() != slots(n - 1) || f.cols() != slots(n)) throw InputError("face matrix has the wrong shape");
    }
    for (int n = 0; n < top; ++n) {
        if (static_cast<int>(degens_[n].size()) != n + 1) throw InputError("wrong number of degeneracies");
        for (const auto& s : degens_[n])
            if (s.rows() != slots(n + 1) || s.cols() != slots(n))
                throw InputError("degeneracy matrix has the wrong shape");
    }
}

SimAbGroup SimAbGroup::constant(const FgAbGroup& a, int n)
{
    if (n < 0) throw InputError("degree bound must be nonnegative");
    std::vector<std::vector<IntMatrix>> faces(static_cast<std::size_t>(n) + 1), degens(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) faces[k].assign(static_cast<std::size_t>(k) + 1, IntMatrix::identity(1));
    for (int k = 0; k < n; ++k) degens[k].assign(static_cast<std::size_t>(k) + 1, IntMatrix::identity(1));
    return SimAbGroup(a, std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 1), std::move(faces),
                      std::move(degens), BarModel::Generic, "const(" + a.to_string() + ")");
}

const IntMatrix& SimAbGroup::face(int n, int i) const
{
    if (n < 1 || n > degree_bound() || i < 0 || i > n) throw InputError("face index out of range");
    return faces_[n][i];
}

const IntMatrix& SimAbGroup::degeneracy(int n, int i) const
{
    if (n < 0 || n >= degree_bound() || i < 0 || i > n) throw InputError("degeneracy index out of range");
    return degens_[n][i];
}

IntMatrix SimAbGroup::face_on_generators(int n, int i) const
{
    return kronecker(face(n, i), IntMatrix::identity(base_.generator_count()));
}

IntMatrix SimAbGroup::degeneracy_on_generators(int n, int i) const
{
    return kronecker(degeneracy(n, i), IntMatrix::identity(base_.generator_count()));
}

namespace {

[[noreturn]] void identity_failure(const std::string& label, const std::string& which, int n, int i, int j)
{
    throw InvariantError("simplicial identity " + which + " fails for " + label + " in degree " + std::to_string(n) +
                         " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
}

}  // namespace

void SimAbGroup::check_identities() const
{
    const int top = degree_bound();
    // Slot matrices act diagonally on the coordinates of A, so equality of
    // slot matrices is equality of the homomorphisms.
    for (int n = 2; n <= top; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (face(n - 1, i) * face(n, j) != face(n - 1, j - 1) * face(n, i))
                    identity_failure(label_, "d_i d_j = d_{j-1} d_i", n, i, j);
    for (int n = 0; n + 2 <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (degeneracy(n + 1, i) * degeneracy(n, j) != degeneracy(n + 1, j + 1) * degeneracy(n, i))
                    identity_failure(label_, "s_i s_j = s_{j+1} s_i", n, i, j);
    for (int n = 0; n < top; ++n) {
        // d_i s_j on degree n, landing back in degree n.
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= n + 1; ++i) {
                const IntMatrix lhs = face(n + 1, i) * degeneracy(n, j);
                if (i == j || i == j + 1) {
                    if (lhs != IntMatrix::identity(slots(n))) identity_failure(label_, "d_i s_i = d_{i+1} s_i = id", n, i, j);
                } else if (i < j) {
                    if (lhs != degeneracy(n - 1, j - 1) * face(n, i)) identity_failure(label_, "d_i s_j = s_{j-1} d_i", n, i, j);
                } else if (lhs != degeneracy(n - 1, j) * face(n, i - 1)) {
                    identity_failure(label_, "d_i s_j = s_j d_{i-1}", n, i, j);
                }
            }
        }
    }
}

IntMatrix e_face(int n, int i)
{
    // letters h_0..h_n -> h_0..h_{n-1}; ∂_n drops h_n, otherwise h_i and h_{i+1} merge.
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) {
        if (k < i || i == n) m.set(k, k, 1);
        else if (k == i) m.set(k, k, 1), m.set(k, k + 1, 1);
        else m.set(k, k + 1, 1);
    }
    return m;
}

IntMatrix e_degeneracy(int n, int i)
{
    IntMatrix m(static_cast<std::size_t>(n) + 2, static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n + 1; ++k) {
        if (k <= i) m.set(k, k, 1);
        else if (k > i + 1) m.set(k, k - 1, 1);
    }
    return m;
}

IntMatrix b_face(int n, int i)
{
    // letters h_1..h_n at slots 0..n-1
    IntMatrix m(static_cast<std::size_t>(n) - 1, static_cast<std::size_t>(n));
    for (int k = 0; k < n - 1; ++k) {
        if (i == 0) m.set(k, k + 1, 1);
        else if (i == n) m.set(k, k, 1);
        else if (k < i - 1) m.set(k, k, 1);
        else if (k == i - 1) m.set(k, k, 1), m.set(k, k + 1, 1);
        else m.set(k, k + 1, 1);
    }
    return m;
}

IntMatrix b_degeneracy(int n, int i)
{
    IntMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n));
    for (int k = 0; k <= n; ++k) {
        if (k < i) m.set(k, k, 1);
        else if (k > i) m.set(k, k - 1, 1);
    }
    return m;
}

namespace {

using LetterFace = IntMatrix (*)(int, int);

/// Diagonal of the bisimplicial group (p, q) -> X(S_p)_q where X is E or B,
/// with `letters(n)` copies of S_n in degree n.
SimAbGroup diagonal_bar(const SimAbGroup& s, std::size_t (*letters)(int), LetterFace outer_face,
                        LetterFace outer_degen, BarModel model, const std::string& label)
{
    const int top = s.degree_bound();
    std::vector<std::size_t> slots;
    for (int n = 0; n <= top; ++n) slots.push_back(letters(n) * s.slots(n));
    std::vector<std::vector<IntMatrix>> faces(static_cast<std::size_t>(top) + 1), degens(static_cast<std::size_t>(top));
    for (int n = 1; n <= top; ++n) {
        for (int i = 0; i <= n; ++i) {
            const IntMatrix inner = kronecker(IntMatrix::identity(letters(n)), s.face(n, i));
            faces[n].push_back(kronecker(outer_face(n, i), IntMatrix::identity(s.slots(n - 1))) * inner);
        }
    }
    for (int n = 0; n < top; ++n) {
        for (int i = 0; i <= n; ++i) {
            const IntMatrix inner = kronecker(IntMatrix::identity(letters(n)), s.degeneracy(n, i));
            degens[n].push_back(kronecker(outer_degen(n, i), IntMatrix::identity(s.slots(n + 1))) * inner);
        }
    }
    return SimAbGroup(s.base(), std::move(slots), std::move(faces), std::move(degens), model, label);
}

std::size_t e_letters(int n) { return static_cast<std::size_t>(n) + 1; }
std::size_t b_letters(int n) { return static_cast<std::size_t>(n); }

}  // namespace

SimAbGroup e_of(const SimAbGroup& s)
{
    return diagonal_bar(s, e_letters, e_face, e_degeneracy, BarModel::Generic, "E(" + s.label() + ")");
}

SimAbGroup b_of(const SimAbGroup& s)
{
    return diagonal_bar(s, b_letters, b_face, b_degeneracy, BarModel::Generic, "B(" + s.label() + ")");
}

SimAbGroup e_of(const FgAbGroup& g, int n)
{
    const SimAbGroup c = SimAbGroup::constant(g, n);
    return diagonal_bar(c, e_letters, e_face, e_degeneracy, BarModel::E, "E(" + g.to_string() + ")");
}

SimAbGroup b_of(const FgAbGroup& g, int n)
{
    const SimAbGroup c = SimAbGroup::constant(g, n);
    return diagonal_bar(c, b_letters, b_face, b_degeneracy, BarModel::B, "B(" + g.to_string() + ")");
}

SimAbGroup iterate_b(const FgAbGroup& a, int s, int n)
{
    if (s < 1) throw InputError("iterate_b needs s >= 1");
    SimAbGroup out = b_of(a, n);
    for (int k = 1; k < s; ++k) out = b_of(out);
    return out;
}

}  // namespace dcoh
