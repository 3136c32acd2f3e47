#pragma once

#include <vector>

#include "gaudin/sparse.hpp"

namespace gaudin {

/// Exact basis of { v : Mv = 0 } over the rationals, computed by
/// fraction-free (Bareiss) Gaussian elimination on integer-scaled rows.
///
/// Deterministic: pivots are the first available row in ascending column
/// order, and the basis holds one vector per free column, ascending. Each
/// basis vector is scaled to coprime integer entries with a positive entry
/// at its defining free column.
std::vector<StateVector> nullspace_basis(const SparseMat& m);

/// Exact rank over the rationals of the spanned subspace. The empty list
/// has rank zero; mixed dimensions throw std::invalid_argument.
int rank(const std::vector<StateVector>& vectors);

}  // namespace gaudin
