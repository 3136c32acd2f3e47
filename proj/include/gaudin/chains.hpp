#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace gaudin {

/// One step (m_r, s_{m_r}) of a quantum-number chain: m is the running
/// excitation count, s the number of sites involved.
struct LabelStep {
  int m = 0;
  int s = 0;
  friend bool operator==(const LabelStep&, const LabelStep&) = default;
};

/// The label ((m_1,s_1), ..., (m_l,s_l)) of a lowest-weight state on an
/// N-site chain; the empty sequence labels the pseudovacuum. Valid chains
/// have strictly increasing m and s, steps of size m_r - m_{r-1} in {1,2},
/// m_r <= s_r <= N, and s_r > m_{r-1} + 1 (with m_0 = 0).
struct LabelChain {
  int sites = 0;
  std::vector<LabelStep> steps;

  int excitation() const { return steps.empty() ? 0 : steps.back().m; }
  int support() const { return steps.empty() ? 0 : steps.back().s; }
  std::string str() const;

  friend bool operator==(const LabelChain&, const LabelChain&) = default;
};

bool chain_valid(const LabelChain& chain);

/// Flattened lexicographic order on the (m, s, m, s, ...) sequence; the
/// empty chain sorts first.
bool chain_less(const LabelChain& a, const LabelChain& b);

/// Every valid chain for the given number of sites, in chain_less order.
std::vector<LabelChain> enumerate_label_chains(int sites);

/// Multiplicities of the irreducible components of the N-fold spin-1/2
/// chain, keyed by twice the spin. Computed from the branching recurrence
///   D_0 -> D_{1/2},   D_k -> D_{k-1/2} + D_k + D_{k+1/2}  (k >= 1/2),
/// starting from a single spin-1/2 site. The irrep of spin k has dimension
/// 4k + 1, and sum_k count * (4k+1) = 3^N.
std::map<int, mpz_class> irrep_counts(int sites);

mpz_class pow3(int n);

}  // namespace gaudin
