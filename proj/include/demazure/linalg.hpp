#pragma once

#include "demazure/rational.hpp"

#include <optional>
#include <vector>

namespace dmz {

// Dense row-major rational matrix, sized once at construction.
struct RatMat {
    int rows = 0, cols = 0;
    RatVec a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& x, const RatMat& y);

// Gauss-Jordan inverse; throws on singular input.
RatMat mat_inverse(const RatMat& m);

// Unique solution of a (possibly overdetermined but consistent) system m x = b;
// nullopt when inconsistent. Requires m to have full column rank.
std::optional<RatVec> solve_exact(const RatMat& m, const RatVec& b);

int mat_rank(RatMat m);

inline Rat dot(const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Int dot(const IntVec& x, const IntVec& y) {
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Rat dot(const RatVec& x, const IntVec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * Rat(y[i]);
    return s;
}

inline IntVec add(const IntVec& x, const IntVec& y) {
    IntVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

inline IntVec sub(const IntVec& x, const IntVec& y) {
    IntVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace dmz
