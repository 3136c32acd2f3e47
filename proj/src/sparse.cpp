#include "gaudin/sparse.hpp"

#include <stdexcept>

namespace gaudin {

SparseMat identity(Index dim) {
  SparseMat m(dim, dim);
  m.setIdentity();
  return m;
}

SparseMat from_triplets(Index rows, Index cols, const std::vector<Triplet>& entries) {
  SparseMat m(rows, cols);
  m.setFromTriplets(entries.begin(), entries.end());
  return pruned(std::move(m));
}

SparseMat pruned(SparseMat m) {
  m.prune([](const Index&, const Index&, const Rational& v) { return !v.is_zero(); });
  m.makeCompressed();
  return m;
}

StateVector pruned(const StateVector& v) {
  StateVector out(v.size());
  for (StateVector::InnerIterator it(v); it; ++it) {
    if (!it.value().is_zero()) out.insertBack(it.index()) = it.value();
  }
  return out;
}

StateVector unit_vector(Index dim, Index index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("unit_vector: index out of range");
  StateVector v(dim);
  v.insert(index) = Rational(1);
  return v;
}

bool is_zero(const SparseMat& m) {
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(m, k); it; ++it) {
      if (!it.value().is_zero()) return false;
    }
  }
  return true;
}

bool is_zero(const StateVector& v) {
  for (StateVector::InnerIterator it(v); it; ++it) {
    if (!it.value().is_zero()) return false;
  }
  return true;
}

bool exact_equal(const SparseMat& a, const SparseMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero(SparseMat(a - b));
}

bool exact_equal(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) return false;
  return is_zero(StateVector(a - b));
}

StateVector mat_apply(const SparseMat& m, const StateVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_apply: dimension mismatch");
  return pruned(StateVector(m * v));
}

}  // namespace gaudin
