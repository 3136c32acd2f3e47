#pragma once

#include <Eigen/SparseCore>

#include <vector>

#include "gaudin/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<gaudin::Rational> : GenericNumTraits<gaudin::Rational> {
  typedef gaudin::Rational Real;
  typedef gaudin::Rational NonInteger;
  typedef gaudin::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
  static inline Real epsilon() { return gaudin::Rational(0); }
  static inline Real dummy_precision() { return gaudin::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gaudin {

using SparseMat = Eigen::SparseMatrix<Rational>;
using StateVector = Eigen::SparseVector<Rational>;
using Triplet = Eigen::Triplet<Rational>;
using Index = Eigen::Index;

SparseMat identity(Index dim);
SparseMat from_triplets(Index rows, Index cols, const std::vector<Triplet>& entries);

/// Drops stored entries that are exactly zero (cancellation leaves them
/// behind in sums and products) and compresses.
SparseMat pruned(SparseMat m);
StateVector pruned(const StateVector& v);

StateVector unit_vector(Index dim, Index index);

bool is_zero(const SparseMat& m);
bool is_zero(const StateVector& v);

bool exact_equal(const SparseMat& a, const SparseMat& b);
bool exact_equal(const StateVector& a, const StateVector& b);

/// Exact matrix-vector product; throws std::invalid_argument on a
/// dimension mismatch. The result carries no zero entries.
StateVector mat_apply(const SparseMat& m, const StateVector& v);

}  // namespace gaudin
