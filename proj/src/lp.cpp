#include "demazure/lp.hpp"

#include <stdexcept>

namespace dmz {

bool lp_feasible_eq(const std::vector<RatVec>& columns, const RatVec& rhs) {
    const int m = int(rhs.size());
    const int n = int(columns.size());
    for (const auto& c : columns)
        if (int(c.size()) != m) throw std::invalid_argument("lp_feasible_eq: column size mismatch");

    // Tableau over original columns plus one artificial per row; artificials
    // start basic, so rows are sign-flipped to make the rhs nonnegative.
    const int total = n + m;
    std::vector<RatVec> t(m, RatVec(total + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        bool flip = rhs[i] < 0;
        for (int j = 0; j < n; ++j) t[i][j] = flip ? -columns[j][i] : columns[j][i];
        t[i][n + i] = 1;
        t[i][total] = flip ? -rhs[i] : rhs[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs for minimizing the artificial sum.
    RatVec obj(total + 1, Rat(0));
    for (int j = 0; j <= total; ++j) {
        Rat s = 0;
        for (int i = 0; i < m; ++i) s += t[i][j];
        obj[j] = (j < n ? Rat(0) : (j < total ? Rat(1) : Rat(0))) - s;
    }

    while (true) {
        int enter = -1;
        for (int j = 0; j < total; ++j)
            if (obj[j] < 0) { enter = j; break; }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][total] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("phase-one simplex unbounded");
        Rat pivot = t[leave][enter];
        for (int j = 0; j <= total; ++j) t[leave][j] /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (int j = 0; j <= total; ++j) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // Feasible iff all artificials vanish; -obj[total] is the attained sum.
    return obj[total] == 0;
}

bool in_cone(const std::vector<RatVec>& generators, const RatVec& target) {
    return lp_feasible_eq(generators, target);
}

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& target) {
    if (points.empty()) return false;
    std::vector<RatVec> cols;
    cols.reserve(points.size());
    for (const auto& p : points) {
        RatVec c = p;
        c.push_back(1);
        cols.push_back(std::move(c));
    }
    RatVec rhs = target;
    rhs.push_back(1);
    return lp_feasible_eq(cols, rhs);
}

}  // namespace dmz
