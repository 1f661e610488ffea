#pragma once

#include "parslice/rational.hpp"

#include <optional>
#include <vector>

namespace parslice {

// Dense matrix of exact rationals, row major.
struct MatQ {
    int rows = 0, cols = 0;
    QVec a;

    MatQ() = default;
    MatQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Exact rank. Rows are cleared to integers, then eliminated fraction-free
// with per-row content stripping to keep entries small.
int exact_rank(const MatQ& m);

// Exact determinant (Bareiss). Throws std::invalid_argument unless square.
Rat exact_det(const MatQ& m);

// Solves A x = b exactly. Returns nullopt when inconsistent. Requires A to
// have full column rank on the consistent span; throws std::invalid_argument
// when the solution is not unique (underdetermined system).
std::optional<QVec> solve_unique(const MatQ& A, const QVec& b);

// Inverse of a nonsingular square matrix. Throws on singular input.
MatQ invert(const MatQ& m);

} // namespace parslice
