#ifndef TCR_QLIN_HPP
#define TCR_QLIN_HPP

#include <optional>
#include <vector>

#include "tcr/q64.hpp"
#include "tcr/vec.hpp"

namespace tcr {

// Small dense exact linear algebra over Q64. Sizes here are bounded by the
// ambient lattice rank (<= 12 or so); the sparse modular kernel in rank.hpp
// handles everything large.
using QVec = std::vector<Q64>;
using QMat = std::vector<QVec>;

int qrank(QMat a);

// Solves A x = b; nullopt if inconsistent. If the system is underdetermined,
// returns the solution with free variables set to zero.
std::optional<QVec> qsolve(QMat a, QVec b);

// Basis of the right null space of A.
std::vector<QVec> qnullspace(QMat a);

// Affine dimension of an integer point set.
int affine_dim(const std::vector<Vec>& pts);

// Integer lattice helpers.

// Basis of {x in Z^n : A x = 0}; the returned lattice is saturated.
std::vector<Vec> int_kernel(const std::vector<Vec>& rows_a);

// Particular integer solution of A x = b, if one exists.
std::optional<Vec> int_solve(const std::vector<Vec>& rows_a, const Vec& b);

}  // namespace tcr

#endif
