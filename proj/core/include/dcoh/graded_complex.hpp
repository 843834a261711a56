#pragma once

#include "dcoh/matrix.hpp"

#include <map>
#include <vector>

namespace dcoh {

enum class Direction {
    Chain,    // d: C_n -> C_{n-1}
    Cochain,  // d: C^n -> C^{n+1}
};

/// Bounded complex of free modules of finite rank over Z or Q. Differentials
/// are integer matrices in every case that occurs here; the ring only decides
/// how homology is computed. d∘d = 0 and shape consistency are checked at
/// construction.
class GradedComplex {
public:
    GradedComplex() = default;

    /// ranks[i] is the rank in degree lo + i. differentials maps a source
    /// degree to its matrix; missing entries are zero maps.
    GradedComplex(Ring ring, Direction direction, int lo, std::vector<std::size_t> ranks,
                  std::map<int, IntMatrix> differentials);

    Ring ring() const { return ring_; }
    Direction direction() const { return direction_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    bool empty() const { return ranks_.empty(); }

    std::size_t rank(int degree) const;
    int target(int degree) const { return direction_ == Direction::Chain ? degree - 1 : degree + 1; }
    int source_into(int degree) const { return direction_ == Direction::Chain ? degree + 1 : degree - 1; }

    /// Differential leaving `degree`, shape rank(target) × rank(degree).
    IntMatrix differential(int degree) const;

    /// Σ (-1)^n rank C_n.
    long long euler_characteristic() const;

    GradedComplex with_ring(Ring ring) const;

private:
    Ring ring_ = Ring::Z;
    Direction direction_ = Direction::Chain;
    int lo_ = 0;
    std::vector<std::size_t> ranks_;
    std::map<int, IntMatrix> diff_;
};

/// Degreewise matrices f_n: A_n -> B_n.
struct ChainMap {
    GradedComplex source;
    GradedComplex target;
    std::map<int, IntMatrix> components;

    IntMatrix at(int degree) const;
    /// True when d_B f = f d_A in every degree.
    bool commutes() const;
};

struct MappingCone {
    GradedComplex complex;
    /// In degree n the cone basis is [A_{shift(n)} block | B_n block];
    /// a_block[n] is the size of the A part.
    std::map<int, std::size_t> a_block;
};

/// Cone(f)^n = A^{n+1} ⊕ B^n with d(a, b) = (-d_A a, f(a) + d_B b) in cochain
/// orientation; the chain version uses A_{n-1} ⊕ B_n with the same formula.
/// Throws InvariantError if f does not commute with the differentials.
MappingCone mapping_cone(const ChainMap& f);

/// Cochain-oriented double complex with commuting squares: h goes
/// (r, s) -> (r+1, s), v goes (r, s) -> (r, s+1).
struct DoubleComplex {
    Ring ring = Ring::Z;
    int r_lo = 0, s_lo = 0;
    std::vector<std::vector<std::size_t>> ranks;  // ranks[r - r_lo][s - s_lo]
    std::map<std::pair<int, int>, IntMatrix> horizontal;
    std::map<std::pair<int, int>, IntMatrix> vertical;

    std::size_t rank(int r, int s) const;
    IntMatrix h(int r, int s) const;
    IntMatrix v(int r, int s) const;
    int r_hi() const { return r_lo + static_cast<int>(ranks.size()) - 1; }
    int s_hi() const { return s_lo + (ranks.empty() ? 0 : static_cast<int>(ranks.front().size())) - 1; }
};

/// Tot^m = ⊕_{r+s=m} D^{r,s} (ordered by r) with d = h + (-1)^r v.
/// Throws InvariantError when some square fails to commute.
GradedComplex total_complex(const DoubleComplex& d);

/// Tensor product of two chain complexes (Koszul signs).
GradedComplex tensor_product(const GradedComplex& a, const GradedComplex& b);

}  // namespace dcoh
