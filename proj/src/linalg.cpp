#include "demazure/linalg.hpp"

#include <stdexcept>

namespace dmz {

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    if (int(v.size()) != m.cols) throw std::invalid_argument("mat_vec: size mismatch");
    RatVec out(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

RatMat mat_mul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: size mismatch");
    RatMat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

RatMat mat_inverse(const RatMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("mat_inverse: not square");
    int n = m.rows;
    RatMat work = m;
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::invalid_argument("mat_inverse: singular matrix");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Rat p = work.at(col, col);
        for (int j = 0; j < n; ++j) {
            work.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work.at(r, col) == 0) continue;
            Rat f = work.at(r, col);
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::optional<RatVec> solve_exact(const RatMat& m, const RatVec& b) {
    if (int(b.size()) != m.rows) throw std::invalid_argument("solve_exact: size mismatch");
    int n = m.rows, k = m.cols;
    RatMat aug(n, k + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, k) = b[i];
    }
    int row = 0;
    std::vector<int> pivot_col(k, -1);
    for (int col = 0; col < k && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (aug.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = col; j <= k; ++j) std::swap(aug.at(p, j), aug.at(row, j));
        Rat pv = aug.at(row, col);
        for (int j = col; j <= k; ++j) aug.at(row, j) /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == row || aug.at(r, col) == 0) continue;
            Rat f = aug.at(r, col);
            for (int j = col; j <= k; ++j) aug.at(r, j) -= f * aug.at(row, j);
        }
        pivot_col[col] = row;
        ++row;
    }
    for (int col = 0; col < k; ++col)
        if (pivot_col[col] < 0) throw std::invalid_argument("solve_exact: column-rank deficient");
    for (int r = row; r < n; ++r)
        if (aug.at(r, k) != 0) return std::nullopt;
    RatVec x(k);
    for (int col = 0; col < k; ++col) x[col] = aug.at(pivot_col[col], k);
    return x;
}

int mat_rank(RatMat m) {
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        for (int r = row + 1; r < m.rows; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat f = m.at(r, col) / m.at(row, col);
            for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
        }
        ++row;
    }
    return row;
}

}  // namespace dmz
