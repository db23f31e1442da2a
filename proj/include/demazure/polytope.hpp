#pragma once

#include "demazure/char_poly.hpp"
#include "demazure/weyl.hpp"

#include <optional>
#include <vector>

namespace dmz {

// One half-space <mu, normal> >= bound, where the normal is the coweight
// v x_i for a minimal coset representative v modulo the i-th maximal
// parabolic, and the bound pairs lambda against u x_i with u the minimal
// representative of the twisted monoid product. Stored both exactly and with
// the denominators cleared for fast integral evaluation.
struct Inequality {
    int v = 0;
    int i = 0;
    Coweight normal;
    Rat bound;
    IntVec normal_scaled;
    Int bound_scaled;
};

// Demazure weight polytope in both descriptions: vertex set {v lambda} over
// the lower Bruhat interval, and the minimal-coset inequality system.
struct DemazurePolytope {
    IntWeight lambda;
    int w = 0;
    std::vector<IntWeight> vertices;
    std::vector<Inequality> inequalities;
};

std::vector<IntWeight> vertex_set(const WeylGroup& group, const IntWeight& lambda, int w);
std::vector<Inequality> inequality_set(const WeylGroup& group, const IntWeight& lambda, int w);
DemazurePolytope build_polytope(const WeylGroup& group, const IntWeight& lambda, int w);

bool contains(const DemazurePolytope& p, const IntWeight& mu);
bool contains(const DemazurePolytope& p, const RatWeight& mu);

// Independent exact-LP route: convex-combination feasibility over the vertex
// set. Shares no code with the inequality evaluation.
bool hull_membership_oracle(const std::vector<IntWeight>& vertices, const RatWeight& mu);

// All integral weights of the polytope in the highest-weight root-lattice
// coset, enumerated over the box 0 <= n <= root-coords(lambda - w0 lambda)
// and filtered through the inequalities; lexicographically sorted.
std::vector<IntWeight> lattice_points(const WeylGroup& group, const DemazurePolytope& p);

// Intersection of the line mu + Q alpha_i with the polytope. lo is the
// alpha_i-minimal endpoint, hi the maximal one; lo == hi marks a degenerate
// segment. nullopt when the line misses the polytope.
struct RootSegment {
    RatWeight lo;
    RatWeight hi;
    Rat t_lo;
    Rat t_hi;
    bool degenerate() const { return t_lo == t_hi; }
};
std::optional<RootSegment> root_string_segment(const WeylGroup& group, const DemazurePolytope& p,
                                               const RatWeight& mu, int i);

// Recomputes both sides of the lattice-points-vs-character-support comparison
// and reports the symmetric difference; nothing is assumed.
struct SaturationReport {
    IntWeight lambda;
    Word word;
    size_t num_lattice_points = 0;
    size_t num_support = 0;
    std::vector<IntWeight> only_polytope;  // lattice points missing from the character
    std::vector<IntWeight> only_character;
    std::vector<std::pair<IntWeight, Int>> multiplicities;  // at lattice points
    bool saturated() const { return only_polytope.empty() && only_character.empty(); }
};
SaturationReport saturation_report(const WeylGroup& group, const IntWeight& lambda, const Word& word,
                                   bool keep_multiplicities = true);

}  // namespace dmz
