#pragma once

#include <utility>
#include <vector>

#include "gaudin/chains.hpp"
#include "gaudin/coproduct.hpp"

namespace gaudin {

/// Unit coefficient on basis index 0: the lowest-weight state at every site.
StateVector pseudovacuum(int sites);

/// Closed-form coefficients of one chain step, normalized to a_0 = 1:
///   step of 1:  (1, m_prev - s_new + 1)
///   step of 2:  (1, -1, m_prev - s_new + 1)
/// Requires m_new - m_prev in {1,2} and s_new > m_prev + 1.
std::vector<Rational> step_coefficients(int m_prev, int m_new, int s_new);

/// The lowest-weight state of the chain, built step by step as
///   sum_i a_i [Delta^(s-1)(F+)]^{dm-i} (F+_s)^i  applied to the previous
/// state. The coefficients are obtained by solving the annihilation
/// condition Delta^(s)(F-) Psi = 0 exactly inside the candidate span (the
/// solve is authoritative; the closed forms are asserted against it).
/// The result is annihilated by Delta^(N)(F-) and is a Delta^(N)(H)
/// eigenvector with eigenvalue m_l - N.
StateVector kernel_state(const LabelChain& chain);

struct EigenLabel {
  LabelChain chain;
  int k = 0;  // bounds: m_l <= k <= 2N - m_l
};

/// The full multiplet over one chain: [Delta^(N)(F+)]^{k - m_l} applied to
/// the kernel state for k = m_l .. 2N - m_l, without rescaling. Every rung
/// is nonzero and one further raising application annihilates the top.
std::vector<std::pair<EigenLabel, StateVector>> ladder_states(const LabelChain& chain);

/// (h - m_i)(h - m_i + 1) where i is selected by s_{m_i} <= h < s_{m_{i+1}}
/// (with s_0 = 0 and s_{m_{l+1}} = N + 1). Requires 2 <= h <= N.
long casimir_eigenvalue(int h, const LabelChain& chain);

/// lambda (N-m)(N-m+2) - mu (N-m) + (mu-lambda)(1-(-1)^{k-m})(N-m+1/2).
Rational hamiltonian_eigenvalue(int k, int m_l, int sites,
                                const HamiltonianParams& params);

struct SpectrumRecord {
  EigenLabel label;
  StateVector vector;
  long h_eigenvalue = 0;                    // k - N
  std::map<int, long> casimir_eigenvalues;  // keyed by h = 2..N
  Rational hamiltonian_eigenvalue;
};

/// All 3^N simultaneous eigenstates with their closed-form eigenvalues,
/// ordered chain-major (chain_less) with k ascending inside each multiplet.
std::vector<SpectrumRecord> full_spectrum(int sites,
                                          const HamiltonianParams& params = {});

}  // namespace gaudin
