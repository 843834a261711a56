#pragma once

#include "dcoh/cover.hpp"
#include "dcoh/deligne_cocycle.hpp"

#include <random>

namespace dcoh {

using CoverPtr = std::shared_ptr<const Cover>;

/// Čech tower of degree p and weight q on the star cover: an integer m_S
/// for every p-simplex S of the nerve (= X), and for r + s = p - 1 with
/// 0 ≤ s ≤ min(q-1, p-1) a rational s-cochain T_{r,s}(S) on U_S for every
/// r-simplex S. The total differential is D = δ̌ + (-1)^r d, where d is ι
/// from the integers to local 0-cochains and the local coboundary otherwise.
class CechTower {
public:
    CechTower(CoverPtr cover, int p, int q);

    const CoverPtr& cover() const { return cover_; }
    const ComplexPtr& complex() const { return cover_->complex(); }
    int p() const { return p_; }
    int q() const { return q_; }
    /// Largest local degree present (−1 when there are no local components).
    int s_max() const { return std::min(q_ - 1, p_ - 1); }
    int r_of(int s) const { return p_ - 1 - s; }

    IntVector& m() { return m_; }
    const IntVector& m() const { return m_; }
    /// Local cochain T_{r(s), s} on U_S for the i-th r-simplex S.
    RatVector& local(int s, std::size_t i) { return local_.at(static_cast<std::size_t>(s)).at(i); }
    const RatVector& local(int s, std::size_t i) const { return local_.at(static_cast<std::size_t>(s)).at(i); }

    friend bool operator==(const CechTower& a, const CechTower& b)
    {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.m_ == b.m_ && a.local_ == b.local_;
    }

private:
    CoverPtr cover_;
    int p_, q_;
    IntVector m_;
    std::vector<std::vector<RatVector>> local_;
};

/// Seeded random tower with small integer and rational entries.
CechTower random_tower(CoverPtr cover, int p, int q, std::mt19937_64& rng);

/// D T, a tower of degree p + 1.
CechTower tower_differential(const CechTower& t);

struct TowerCheck {
    bool valid = false;
    /// First violated equation with its intersection key, empty when valid.
    std::string defect;
};

TowerCheck tower_check(const CechTower& t);

/// Front-face/back-face collapse to the cone model, defined for any tower:
/// c = Φ(m), ω = (-1)^p Σ_r (-1)^r Φ(δT_{r,q-1}), θ = (-1)^{p-1} Σ Φ(T_{r,s}),
/// with Φ(f)(τ) = f_{τ[0..r]}(τ[r..r+s]).
DeligneCocycle collapse_cochains(const CechTower& t);

/// collapse_cochains for a valid tower; throws InputError otherwise.
DeligneCocycle tower_collapse(const CechTower& t);

/// Tower of a valid cocycle with p ≤ q, built by solving integrally on the
/// contractible pieces U_S. Its collapse is equivalent to x.
CechTower localize(const DeligneCocycle& x, CoverPtr cover);

struct GerbeData {
    /// g_S = exp T_{2,0}(S) on U_S for each triangle S (Q/Z values per vertex).
    std::vector<RatVector> g;
    /// A_S = T_{1,1}(S) for each edge S.
    std::vector<RatVector> a;
    /// B_v = T_{0,2}(v) for each vertex v.
    std::vector<RatVector> b;
    /// Glued global 3-cochain (-1)^p Φ(δB).
    Cochain curvature;
    bool consistent = false;
};

/// Degree-3 tower read as gerbe data with connective structure and curving.
GerbeData gerbe_view(const CechTower& t);

}  // namespace dcoh
