#ifndef ALCOVE_INTMAT_HPP
#define ALCOVE_INTMAT_HPP

#include <optional>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

/// Column-major arbitrary-precision integer matrix.
struct IntMat {
    int rows = 0;
    std::vector<std::vector<BigInt>> col;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), col(c, std::vector<BigInt>(r, 0)) {}

    int cols() const { return static_cast<int>(col.size()); }
    BigInt& at(int r, int c) { return col[c][r]; }
    const BigInt& at(int r, int c) const { return col[c][r]; }
};

/// Column echelon form H = M * V with V unimodular; pivots[k] = (row, col of H).
struct ColumnEchelon {
    IntMat h;
    IntMat v;
    std::vector<std::pair<int, int>> pivots;
};

ColumnEchelon column_echelon(IntMat m);

int rank(const ColumnEchelon& e);

/// Basis of the integer kernel lattice of M (full and saturated).
IntMat kernel_basis(const IntMat& m);

/// One integer solution x of M x = b, if any.
std::optional<std::vector<BigInt>> solve(const ColumnEchelon& e, const std::vector<BigInt>& b);

/// Elementary divisors d_1 | d_2 | ... (nonzero ones), via Smith reduction.
std::vector<BigInt> smith_divisors(IntMat m);

}  // namespace alcove

#endif
