#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gaudin/elimination.hpp"
#include "test_util.hpp"

using namespace gaudin;
using testutil::SplitMix;

namespace {

SparseMat random_matrix(Index rows, Index cols, SplitMix& rng, int fill_percent) {
  std::vector<Triplet> t;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      if (rng.next() % 100 < static_cast<unsigned>(fill_percent)) {
        t.emplace_back(r, c, Rational(rng.small_int(-5, 5), rng.small_int(1, 3)));
      }
    }
  }
  return from_triplets(rows, cols, t);
}

}  // namespace

TEST_CASE("nullspace of the identity is empty") {
  CHECK(nullspace_basis(identity(7)).empty());
}

TEST_CASE("nullspace of the zero matrix is the unit basis") {
  const SparseMat zero(4, 4);
  const auto basis = nullspace_basis(zero);
  REQUIRE(basis.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(exact_equal(basis[i], unit_vector(4, i)));
  }
}

TEST_CASE("nullspace vectors are exact solutions and independent") {
  SplitMix rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    const Index n = 6 + static_cast<Index>(trial % 3);
    const SparseMat m = random_matrix(n, n, rng, 35);
    const auto basis = nullspace_basis(m);
    for (const StateVector& v : basis) {
      CHECK(is_zero(mat_apply(m, v)));
      CHECK_FALSE(is_zero(v));
    }
    if (!basis.empty()) CHECK(rank(basis) == static_cast<int>(basis.size()));

    // rank-nullity, with the rank computed from the matrix rows as a second
    // route through the elimination
    std::vector<StateVector> rows(m.rows(), StateVector(m.cols()));
    for (Index k = 0; k < m.outerSize(); ++k) {
      for (SparseMat::InnerIterator it(m, k); it; ++it) {
        rows[it.row()].coeffRef(it.col()) = it.value();
      }
    }
    CHECK(rank(rows) + static_cast<int>(basis.size()) == static_cast<int>(m.cols()));
  }
}

TEST_CASE("known two-dimensional kernel") {
  // rows: (1 1 0 0), (0 0 1 1) -> kernel spanned by (1,-1,0,0), (0,0,1,-1)
  const SparseMat m = from_triplets(
      2, 4,
      {{0, 0, Rational(1)}, {0, 1, Rational(1)}, {1, 2, Rational(1)}, {1, 3, Rational(1)}});
  const auto basis = nullspace_basis(m);
  REQUIRE(basis.size() == 2);
  // one vector per free column (1 and 3), primitive integer entries,
  // positive at the defining column
  CHECK(basis[0].coeff(1) == Rational(1));
  CHECK(basis[0].coeff(0) == Rational(-1));
  CHECK(basis[1].coeff(3) == Rational(1));
  CHECK(basis[1].coeff(2) == Rational(-1));
}

TEST_CASE("deterministic output") {
  SplitMix rng(91);
  const SparseMat m = random_matrix(8, 8, rng, 40);
  const auto a = nullspace_basis(m);
  const auto b = nullspace_basis(m);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(exact_equal(a[i], b[i]));
}

TEST_CASE("rank basics") {
  CHECK(rank({}) == 0);

  const StateVector v = testutil::combo({{"01", 2}, {"10", -3}});
  CHECK(rank({v}) == 1);
  CHECK(rank({v, pruned(StateVector(v * Rational(2)))}) == 1);

  const StateVector w = testutil::combo({{"00", 1}});
  CHECK(rank({v, w}) == 2);

  StateVector mismatched(5);
  CHECK_THROWS_AS(rank({v, mismatched}), std::invalid_argument);
}

TEST_CASE("rank is invariant under scaling and permutation") {
  SplitMix rng(53);
  std::vector<StateVector> vectors;
  for (int i = 0; i < 6; ++i) {
    StateVector v(10);
    for (Index j = 0; j < 10; ++j) {
      if (rng.next() % 2 == 0) v.coeffRef(j) = Rational(rng.small_int(-3, 3));
    }
    vectors.push_back(pruned(v));
  }
  const int base = rank(vectors);

  std::vector<StateVector> scaled;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    scaled.push_back(pruned(StateVector(vectors[i] * Rational(static_cast<long>(i) + 2, 7))));
  }
  CHECK(rank(scaled) == base);

  std::reverse(vectors.begin(), vectors.end());
  CHECK(rank(vectors) == base);
}
