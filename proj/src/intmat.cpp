#include "alcove/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace alcove {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? -v : v; }

// column[j] -= q * column[p]
void col_axpy(IntMat& m, int j, int p, const BigInt& q) {
    if (q == 0) return;
    auto& cj = m.col[j];
    const auto& cp = m.col[p];
    for (int r = 0; r < m.rows; ++r)
        if (cp[r] != 0) cj[r] -= q * cp[r];
}

void col_negate(IntMat& m, int j) {
    for (auto& v : m.col[j]) v = -v;
}

}  // namespace

ColumnEchelon column_echelon(IntMat m) {
    ColumnEchelon e;
    const int cols = m.cols();
    e.v = IntMat(cols, cols);
    for (int i = 0; i < cols; ++i) e.v.at(i, i) = 1;

    int pc = 0;  // next pivot column
    for (int r = 0; r < m.rows && pc < cols; ++r) {
        // gcd-style elimination among columns pc.. in row r
        while (true) {
            int best = -1;
            for (int j = pc; j < cols; ++j) {
                if (m.at(r, j) == 0) continue;
                if (best < 0 || abs_big(m.at(r, j)) < abs_big(m.at(r, best))) best = j;
            }
            if (best < 0) break;  // row r is clear; no pivot here
            if (best != pc) {
                std::swap(m.col[best], m.col[pc]);
                std::swap(e.v.col[best], e.v.col[pc]);
            }
            bool clean = true;
            for (int j = pc + 1; j < cols; ++j) {
                if (m.at(r, j) == 0) continue;
                BigInt q = m.at(r, j) / m.at(r, pc);
                col_axpy(m, j, pc, q);
                col_axpy(e.v, j, pc, q);
                if (m.at(r, j) != 0) clean = false;
            }
            if (clean) {
                if (m.at(r, pc) < 0) {
                    col_negate(m, pc);
                    col_negate(e.v, pc);
                }
                e.pivots.emplace_back(r, pc);
                ++pc;
                break;
            }
        }
    }
    e.h = std::move(m);
    return e;
}

int rank(const ColumnEchelon& e) { return static_cast<int>(e.pivots.size()); }

IntMat kernel_basis(const IntMat& m) {
    ColumnEchelon e = column_echelon(m);
    IntMat k(m.cols(), m.cols() - rank(e));
    int out = 0;
    for (int j = rank(e); j < m.cols(); ++j) k.col[out++] = e.v.col[j];
    return k;
}

std::optional<std::vector<BigInt>> solve(const ColumnEchelon& e, const std::vector<BigInt>& b) {
    assert(static_cast<int>(b.size()) == e.h.rows);
    std::vector<BigInt> res = b;
    std::vector<BigInt> y(e.h.cols(), 0);
    for (const auto& [r, c] : e.pivots) {
        if (res[r] == 0) continue;
        if (res[r] % e.h.at(r, c) != 0) return std::nullopt;
        BigInt t = res[r] / e.h.at(r, c);
        y[c] = t;
        for (int i = 0; i < e.h.rows; ++i)
            if (e.h.at(i, c) != 0) res[i] -= t * e.h.at(i, c);
    }
    for (const auto& v : res)
        if (v != 0) return std::nullopt;
    // x = V y
    std::vector<BigInt> x(e.v.rows, 0);
    for (int c = 0; c < e.v.cols(); ++c) {
        if (y[c] == 0) continue;
        for (int r = 0; r < e.v.rows; ++r)
            if (e.v.at(r, c) != 0) x[r] += y[c] * e.v.at(r, c);
    }
    return x;
}

std::vector<BigInt> smith_divisors(IntMat m) {
    const int rows = m.rows;
    const int cols = m.cols();
    std::vector<BigInt> divisors;
    int top = 0;
    // working region starts at (top, top); columns/rows below `top` are done
    while (top < rows && top < cols) {
        // find a nonzero pivot with minimal absolute value
        int pr = -1, pc = -1;
        for (int c = top; c < cols; ++c)
            for (int r = top; r < rows; ++r) {
                const BigInt& v = m.at(r, c);
                if (v == 0) continue;
                if (pr < 0 || abs_big(v) < abs_big(m.at(pr, pc))) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        std::swap(m.col[pc], m.col[top]);
        for (int c = top; c < cols; ++c) std::swap(m.at(pr, c), m.at(top, c));
        bool again = false;
        for (int c = top + 1; c < cols; ++c) {
            if (m.at(top, c) == 0) continue;
            BigInt q = m.at(top, c) / m.at(top, top);
            col_axpy(m, c, top, q);
            if (m.at(top, c) != 0) again = true;
        }
        for (int r = top + 1; r < rows; ++r) {
            if (m.at(r, top) == 0) continue;
            BigInt q = m.at(r, top) / m.at(top, top);
            for (int c = top; c < cols; ++c) m.at(r, c) -= q * m.at(top, c);
            if (m.at(r, top) != 0) again = true;
        }
        if (again) continue;
        // pivot divides its whole residual block, else fold an offender in
        bool fixed = true;
        for (int c = top + 1; c < cols && fixed; ++c)
            for (int r = top + 1; r < rows && fixed; ++r)
                if (m.at(r, c) % m.at(top, top) != 0) {
                    for (int cc = top; cc < cols; ++cc) m.at(top, cc) += m.at(r, cc);
                    fixed = false;
                }
        if (!fixed) continue;
        BigInt d = abs_big(m.at(top, top));
        divisors.push_back(d);
        ++top;
    }
    return divisors;
}

}  // namespace alcove
