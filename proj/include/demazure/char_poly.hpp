#pragma once

#include "demazure/root_datum.hpp"
#include "demazure/weyl.hpp"

#include <map>

namespace dmz {

// Finite weight -> multiplicity map with deterministic (lexicographic)
// iteration; zero multiplicities are never stored. Entries may be negative for
// virtual characters produced by a bare operator application.
using CharacterPoly = std::map<IntWeight, Int, LexLess>;

CharacterPoly monomial(const IntWeight& w);

// The divided-difference style operator attached to the i-th simple root,
// extended linearly. On a single exponential with pairing m against the i-th
// simple coroot it yields the string from the weight down to its reflection
// (m >= 0), zero (m == -1), or minus the interior string (m < -2 .. i.e. m <= -2).
CharacterPoly demazure_operator(const RootDatum& datum, int i, const CharacterPoly& p);

// Character of the Demazure module attached to a dominant integral weight and
// a reduced word: operators are applied right-to-left onto the highest-weight
// exponential. Non-reduced words and non-dominant weights are rejected.
CharacterPoly demazure_character(const WeylGroup& group, const IntWeight& lambda, const Word& word);

Int multiplicity(const CharacterPoly& c, const IntWeight& mu);

Int total_dimension(const CharacterPoly& c);

// Full weight multiplicities of the irreducible module with the given highest
// weight, by the Freudenthal recursion over the dominant chamber followed by
// orbit expansion. Independent of the operator code path above; serves as its
// oracle at the longest element.
CharacterPoly freudenthal_character(const WeylGroup& group, const IntWeight& lambda,
                                    uint64_t max_box_points = 50'000'000);

// Product formula dimension.
Int weyl_dimension(const RootDatum& datum, const IntWeight& lambda);

}  // namespace dmz
