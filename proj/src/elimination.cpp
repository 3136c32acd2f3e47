#include "gaudin/elimination.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gaudin {
namespace {

// Sparse row over the integers: (column, value) pairs sorted by column,
// all values nonzero.
using IntRow = std::vector<std::pair<int, mpz_class>>;

mpz_class coeff_at(const IntRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, int c) { return entry.first < c; });
  if (it != row.end() && it->first == col) return it->second;
  return mpz_class(0);
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
  return q;
}

// (pivot * target - factor * pivot_row) / divisor, entrywise. Every
// intermediate value is a minor of the input (Sylvester identity), so the
// division is exact.
IntRow fraction_free_update(const mpz_class& pivot, const IntRow& target,
                            const mpz_class& factor, const IntRow& pivot_row,
                            const mpz_class& divisor) {
  IntRow out;
  if (factor == 0) {
    out.reserve(target.size());
    for (const auto& [col, value] : target) {
      out.emplace_back(col, exact_div(pivot * value, divisor));
    }
    return out;
  }
  out.reserve(target.size() + pivot_row.size());
  auto a = target.begin();
  auto b = pivot_row.begin();
  while (a != target.end() || b != pivot_row.end()) {
    int col;
    mpz_class value;
    if (b == pivot_row.end() || (a != target.end() && a->first < b->first)) {
      col = a->first;
      value = pivot * a->second;
      ++a;
    } else if (a == target.end() || b->first < a->first) {
      col = b->first;
      value = -factor * b->second;
      ++b;
    } else {
      col = a->first;
      value = pivot * a->second - factor * b->second;
      ++a;
      ++b;
    }
    if (value != 0) out.emplace_back(col, exact_div(value, divisor));
  }
  return out;
}

struct Echelon {
  std::vector<IntRow> pivot_rows;  // in elimination order
  std::vector<int> pivot_cols;     // ascending
};

// One-step Bareiss. Pivot: first remaining row with a nonzero entry, in
// ascending column order. Every remaining row gets the update each step
// (also with factor zero); skipping would break the exact divisions.
Echelon fraction_free_echelon(std::vector<IntRow> rows, int ncols) {
  Echelon result;
  mpz_class previous_pivot(1);
  std::size_t next = 0;
  for (int c = 0; c < ncols && next < rows.size(); ++c) {
    std::size_t found = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (coeff_at(rows[i], c) != 0) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    const mpz_class pivot = coeff_at(rows[next], c);
    for (std::size_t i = next + 1; i < rows.size(); ++i) {
      rows[i] = fraction_free_update(pivot, rows[i], coeff_at(rows[i], c),
                                     rows[next], previous_pivot);
    }
    result.pivot_cols.push_back(c);
    previous_pivot = pivot;
    ++next;
  }
  rows.resize(next);
  result.pivot_rows = std::move(rows);
  return result;
}

// Clears denominators; row scaling leaves rank and nullspace unchanged.
IntRow integer_row(const std::vector<std::pair<int, Rational>>& entries) {
  mpz_class lcm(1);
  for (const auto& [col, value] : entries) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.denominator().get_mpz_t());
  }
  IntRow out;
  out.reserve(entries.size());
  for (const auto& [col, value] : entries) {
    out.emplace_back(col, mpz_class(value.numerator() * (lcm / value.denominator())));
  }
  return out;
}

std::vector<IntRow> matrix_rows(const SparseMat& m) {
  std::vector<std::vector<std::pair<int, Rational>>> buckets(m.rows());
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(m, k); it; ++it) {
      if (!it.value().is_zero()) {
        buckets[it.row()].emplace_back(static_cast<int>(it.col()), it.value());
      }
    }
  }
  std::vector<IntRow> rows;
  rows.reserve(buckets.size());
  for (auto& bucket : buckets) {
    if (bucket.empty()) continue;
    // column-major iteration already emits ascending columns per row
    rows.push_back(integer_row(bucket));
  }
  return rows;
}

}  // namespace

std::vector<StateVector> nullspace_basis(const SparseMat& m) {
  const int ncols = static_cast<int>(m.cols());
  Echelon ech = fraction_free_echelon(matrix_rows(m), ncols);

  std::vector<bool> is_pivot(ncols, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<StateVector> basis;
  std::vector<Rational> x(ncols);
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::fill(x.begin(), x.end(), Rational(0));
    x[free_col] = Rational(1);
    for (int t = static_cast<int>(ech.pivot_cols.size()) - 1; t >= 0; --t) {
      const int c = ech.pivot_cols[t];
      Rational sum(0);
      mpz_class diag(0);
      for (const auto& [col, value] : ech.pivot_rows[t]) {
        if (col == c) {
          diag = value;
        } else if (col > c && !x[col].is_zero()) {
          sum += Rational(value) * x[col];
        }
      }
      x[c] = -sum / Rational(diag);
    }
    // primitive integer scaling; the defining entry stays positive
    mpz_class lcm(1);
    for (int j = 0; j < ncols; ++j) {
      if (!x[j].is_zero()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x[j].denominator().get_mpz_t());
      }
    }
    mpz_class gcd(0);
    std::vector<std::pair<int, mpz_class>> scaled;
    for (int j = 0; j < ncols; ++j) {
      if (x[j].is_zero()) continue;
      mpz_class value = x[j].numerator() * (lcm / x[j].denominator());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), value.get_mpz_t());
      scaled.emplace_back(j, std::move(value));
    }
    StateVector v(ncols);
    for (const auto& [j, value] : scaled) {
      v.insertBack(j) = Rational(mpz_class(value / gcd));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const std::vector<StateVector>& vectors) {
  if (vectors.empty()) return 0;
  const Index dim = vectors.front().size();
  std::vector<IntRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("rank: mixed dimensions");
    std::vector<std::pair<int, Rational>> entries;
    for (StateVector::InnerIterator it(v); it; ++it) {
      if (!it.value().is_zero()) entries.emplace_back(static_cast<int>(it.index()), it.value());
    }
    if (!entries.empty()) rows.push_back(integer_row(entries));
  }
  return static_cast<int>(
      fraction_free_echelon(std::move(rows), static_cast<int>(dim)).pivot_cols.size());
}

}  // namespace gaudin
