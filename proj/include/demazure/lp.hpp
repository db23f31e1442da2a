#pragma once

#include "demazure/rational.hpp"

#include <vector>

namespace dmz {

// Exact phase-one simplex (Bland's rule, deterministic pivoting) for the
// feasibility question  A x = b, x >= 0.
bool lp_feasible_eq(const std::vector<RatVec>& columns, const RatVec& rhs);

// Is target a nonnegative combination of the given vectors?
bool in_cone(const std::vector<RatVec>& generators, const RatVec& target);

// Is target a convex combination of the given points?
bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& target);

}  // namespace dmz
