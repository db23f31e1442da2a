#include "demazure/lattice.hpp"

#include <stdexcept>

namespace dmz {

namespace {

IMat identity_mat(int n) {
    IMat m(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

SmithForm smith_form(IMat a) {
    const int rows = int(a.size());
    const int cols = rows ? int(a[0].size()) : 0;
    SmithForm f;
    f.u = identity_mat(rows);
    f.u_inv = identity_mat(rows);
    f.v = identity_mat(cols);

    // u_inv absorbs the inverse of every row operation as a column operation,
    // so no rational elimination is ever needed.
    auto swap_rows = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(f.u[i], f.u[j]);
        for (int r = 0; r < rows; ++r) std::swap(f.u_inv[r][i], f.u_inv[r][j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(f.v[r][i], f.v[r][j]);
    };
    auto add_row = [&](int dst, int src, const Int& c) {  // row dst += c * row src
        for (int j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
        for (int j = 0; j < rows; ++j) f.u[dst][j] += c * f.u[src][j];
        for (int r = 0; r < rows; ++r) f.u_inv[r][src] -= c * f.u_inv[r][dst];
    };
    auto add_col = [&](int dst, int src, const Int& c) {
        for (int r = 0; r < rows; ++r) a[r][dst] += c * a[r][src];
        for (int r = 0; r < cols; ++r) f.v[r][dst] += c * f.v[r][src];
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < cols; ++j) a[i][j] = -a[i][j];
        for (int j = 0; j < rows; ++j) f.u[i][j] = -f.u[i][j];
        for (int r = 0; r < rows; ++r) f.u_inv[r][i] = -f.u_inv[r][i];
    };

    const int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
        while (true) {
            // Smallest nonzero entry in the trailing block as pivot.
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    if (pi < 0 || abs(a[i][j]) < abs(a[pi][pj])) { pi = i; pj = j; }
                }
            if (pi < 0) break;  // trailing block zero
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            if (a[t][t] < 0) negate_row(t);
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                if (q != 0) add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                if (q != 0) add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
    }
    f.s = std::move(a);
    return f;
}

SpanLattice span_lattice(const std::vector<IntVec>& vectors, int ambient_dim) {
    IMat a(ambient_dim, IntVec(vectors.size(), Int(0)));
    for (size_t c = 0; c < vectors.size(); ++c) {
        if (int(vectors[c].size()) != ambient_dim) throw std::invalid_argument("span_lattice: dim mismatch");
        for (int r = 0; r < ambient_dim; ++r) a[r][c] = vectors[c][r];
    }
    SmithForm f = smith_form(std::move(a));
    SpanLattice out;
    const int steps = std::min(ambient_dim, int(vectors.size()));
    for (int t = 0; t < steps; ++t)
        if (f.s[t][t] != 0) ++out.dim;
    for (int k = 0; k < out.dim; ++k) {
        IntVec col(ambient_dim);
        for (int r = 0; r < ambient_dim; ++r) col[r] = f.u_inv[r][k];
        out.basis.push_back(std::move(col));
    }
    return out;
}

IntVec lattice_coords(const std::vector<IntVec>& basis, const IntVec& x) {
    const int n = int(x.size());
    const int k = int(basis.size());
    RatMat m(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = basis[j][i];
    auto sol = solve_exact(m, to_rat(x));
    if (!sol) throw std::invalid_argument("lattice_coords: vector outside the span");
    return to_int(*sol);
}

}  // namespace dmz
