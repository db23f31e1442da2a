#pragma once

#include "demazure/char_poly.hpp"
#include "demazure/weyl.hpp"

#include <cstdint>
#include <vector>

namespace dmz {

// The cone of pairs (lambda, mu) with lambda rationally dominant and mu inside
// the Demazure polytope of (lambda, w), living in doubled weight space.
// Generated by the pairs (omega_i, v omega_i) over the lower interval of w;
// cut out by dominance together with the doubled minimal-coset inequalities.
// Extremality of generators is verified per instance, never assumed.
struct SemigroupCone {
    int w = 0;
    int rank = 0;          // ambient_dim = 2 * rank
    std::vector<IntVec> generators;     // doubled (lambda|mu) coordinates, lex sorted
    std::vector<int> extremal;          // indices into generators
    std::vector<IntVec> ineq_normals;   // integer normals, all must pair >= 0
    size_t num_dominance = 0;           // leading rows of ineq_normals
};

// Doubled weights <-> coordinates in the lattice of pairs whose difference
// lies in the root lattice. Throws when the pair is outside that lattice.
IntVec pair_to_lattice(const RootDatum& datum, const IntVec& doubled);
IntVec pair_from_lattice(const RootDatum& datum, const IntVec& coords);
bool pair_in_lattice(const RootDatum& datum, const IntVec& doubled);

SemigroupCone cone_build(const WeylGroup& group, int w);

bool cone_satisfies(const SemigroupCone& cone, const IntVec& doubled);

struct HilbertBasisOptions {
    bool parallel = true;
    uint64_t residue_cap = 20'000'000;  // guard on the residue count per simplicial cone
};

struct HilbertBasisResult {
    std::vector<IntVec> basis;      // doubled coordinates, lex sorted
    size_t num_candidates = 0;      // parallelepiped points + rays before reduction
    size_t num_simplices = 0;
};

// Minimal generating set of the semigroup of lattice pairs in the cone:
// triangulate over verified extremal rays, enumerate the half-open
// parallelepiped of each simplicial piece by diagonal-form residues, then
// reduce candidates in degree order against the inequality description.
HilbertBasisResult hilbert_basis(const WeylGroup& group, const SemigroupCone& cone,
                                 const HilbertBasisOptions& opts = {});

// Checks that every basis pair has a fundamental-weight left part and that the
// basis coincides with the nonzero-multiplicity pairs of the fundamental
// Demazure characters.
struct PropertyPReport {
    bool holds = false;
    size_t basis_size = 0;
    size_t extremal_rays = 0;
    std::vector<IntVec> non_fundamental;  // basis pairs with composite left part
    std::vector<IntVec> missing;          // expected pairs absent from the basis
    std::vector<IntVec> extra;            // basis pairs without character support
};
PropertyPReport property_p_check(const WeylGroup& group, int w, const HilbertBasisOptions& opts = {});

}  // namespace dmz
