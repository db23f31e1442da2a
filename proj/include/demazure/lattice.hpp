#pragma once

#include "demazure/linalg.hpp"
#include "demazure/rational.hpp"

#include <vector>

namespace dmz {

// Row-major integer matrix as a list of rows.
using IMat = std::vector<IntVec>;

// Diagonalization over the integers: u * a * v = s with u, v unimodular and s
// diagonal (nonnegative). Divisibility chaining is not enforced; residue
// enumeration only needs a diagonal form. u_inv is the exact inverse of u.
struct SmithForm {
    IMat s, u, v, u_inv;
    std::vector<Int> diagonal(int upto) const {
        std::vector<Int> d;
        for (int i = 0; i < upto; ++i) d.push_back(s[i][i]);
        return d;
    }
};
SmithForm smith_form(IMat a);

// Basis of the saturation Z^N \cap span_Q(vectors): the first rank columns of
// u^{-1} from the Smith form of the column matrix.
struct SpanLattice {
    int dim = 0;                 // rank of the span
    std::vector<IntVec> basis;   // dim vectors of length N
};
SpanLattice span_lattice(const std::vector<IntVec>& vectors, int ambient_dim);

// Exact coordinates of x in an integer basis; throws when x is outside the
// rational span or the coordinates are non-integral.
IntVec lattice_coords(const std::vector<IntVec>& basis, const IntVec& x);

}  // namespace dmz
