#include "gaudin/eigenbasis.hpp"

#include <sstream>
#include <stdexcept>

#include "gaudin/elimination.hpp"

namespace gaudin {

StateVector pseudovacuum(int sites) {
  if (sites < 1) throw std::invalid_argument("pseudovacuum: sites must be >= 1");
  return unit_vector(chain_dim(sites), 0);
}

std::vector<Rational> step_coefficients(int m_prev, int m_new, int s_new) {
  const int dm = m_new - m_prev;
  if (dm != 1 && dm != 2) {
    throw std::invalid_argument("step_coefficients: step size must be 1 or 2");
  }
  if (s_new <= m_prev + 1) {
    throw std::invalid_argument("step_coefficients: requires s_new > m_prev + 1");
  }
  const Rational tail(m_prev - s_new + 1);
  if (dm == 1) return {Rational(1), tail};
  return {Rational(1), Rational(-1), tail};
}

namespace {

// Delta^(s)(X) acting on the first s sites of an N-site chain.
SparseMat leading_coproduct(GeneratorName x, int s, int sites) {
  return graded_kron(coproduct(x, s), chain_identity(sites - s)).matrix;
}

std::vector<Rational> solve_step_coefficients(const SparseMat& annihilator,
                                              const std::vector<StateVector>& candidates) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const StateVector image = mat_apply(annihilator, candidates[i]);
    for (StateVector::InnerIterator it(image); it; ++it) {
      t.emplace_back(it.index(), static_cast<Index>(i), it.value());
    }
  }
  const SparseMat images =
      from_triplets(annihilator.rows(), static_cast<Index>(candidates.size()), t);
  const std::vector<StateVector> kernel = nullspace_basis(images);
  if (kernel.size() != 1) {
    throw std::logic_error("kernel_state: candidate span gave " +
                           std::to_string(kernel.size()) + " solutions, expected 1");
  }
  const Rational leading = kernel.front().coeff(0);
  if (leading.is_zero()) {
    throw std::logic_error("kernel_state: vanishing leading coefficient");
  }
  std::vector<Rational> coeffs(candidates.size(), Rational(0));
  for (StateVector::InnerIterator it(kernel.front()); it; ++it) {
    coeffs[it.index()] = it.value() / leading;
  }
  return coeffs;
}

}  // namespace

StateVector kernel_state(const LabelChain& chain) {
  if (!chain_valid(chain)) throw std::invalid_argument("kernel_state: invalid chain");
  const int sites = chain.sites;
  StateVector state = pseudovacuum(sites);
  int m_prev = 0;
  for (const LabelStep& step : chain.steps) {
    const int dm = step.m - m_prev;
    const SparseMat raise_left = leading_coproduct(GeneratorName::Fplus, step.s - 1, sites);
    const SparseMat raise_site =
        embed_at_site(site_generator(GeneratorName::Fplus), step.s, sites).matrix;
    const SparseMat annihilator = leading_coproduct(GeneratorName::Fminus, step.s, sites);

    std::vector<StateVector> candidates;
    candidates.reserve(dm + 1);
    for (int i = 0; i <= dm; ++i) {
      StateVector c = state;
      for (int applications = 0; applications < i; ++applications) {
        c = mat_apply(raise_site, c);
      }
      for (int applications = 0; applications < dm - i; ++applications) {
        c = mat_apply(raise_left, c);
      }
      candidates.push_back(std::move(c));
    }

    // the annihilation condition fixes the coefficients; the closed forms
    // must agree with the solved values
    const std::vector<Rational> solved = solve_step_coefficients(annihilator, candidates);
    const std::vector<Rational> closed = step_coefficients(m_prev, step.m, step.s);
    if (solved != closed) {
      std::ostringstream os;
      os << "kernel_state: solved coefficients (";
      for (const Rational& a : solved) os << " " << a.str();
      os << " ) disagree with closed forms at step (" << step.m << "," << step.s << ")";
      throw std::logic_error(os.str());
    }

    StateVector next(chain_dim(sites));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      next = StateVector(next + candidates[i] * solved[i]);
    }
    state = pruned(next);
    m_prev = step.m;
  }
  return state;
}

std::vector<std::pair<EigenLabel, StateVector>> ladder_states(const LabelChain& chain) {
  if (!chain_valid(chain)) throw std::invalid_argument("ladder_states: invalid chain");
  const int sites = chain.sites;
  const int m = chain.excitation();
  const SparseMat raise = coproduct(GeneratorName::Fplus, sites).matrix;

  std::vector<std::pair<EigenLabel, StateVector>> out;
  StateVector state = kernel_state(chain);
  for (int k = m; k <= 2 * sites - m; ++k) {
    if (is_zero(state)) {
      throw std::logic_error("ladder_states: rung k=" + std::to_string(k) +
                             " vanished for chain " + chain.str());
    }
    out.emplace_back(EigenLabel{chain, k}, state);
    state = mat_apply(raise, state);
  }
  if (!is_zero(state)) {
    throw std::logic_error("ladder_states: multiplet does not close for chain " + chain.str());
  }
  return out;
}

long casimir_eigenvalue(int h, const LabelChain& chain) {
  if (h < 2 || h > chain.sites) {
    throw std::invalid_argument("casimir_eigenvalue: h out of range");
  }
  int m = 0;  // the step with the largest s_{m_i} <= h; s_0 = 0 always qualifies
  for (const LabelStep& step : chain.steps) {
    if (step.s <= h) {
      m = step.m;
    } else {
      break;
    }
  }
  return static_cast<long>(h - m) * (h - m + 1);
}

Rational hamiltonian_eigenvalue(int k, int m_l, int sites, const HamiltonianParams& params) {
  if (k < m_l || k > 2 * sites - m_l) {
    throw std::invalid_argument("hamiltonian_eigenvalue: k out of bounds");
  }
  const long n_m = sites - m_l;
  Rational value = params.lambda * Rational(n_m * (n_m + 2)) - params.mu * Rational(n_m);
  if ((k - m_l) % 2 != 0) {
    value += (params.mu - params.lambda) * Rational(2 * n_m + 1);
  }
  return value;
}

std::vector<SpectrumRecord> full_spectrum(int sites, const HamiltonianParams& params) {
  if (sites < 1) throw std::invalid_argument("full_spectrum: sites must be >= 1");
  std::vector<SpectrumRecord> records;
  records.reserve(static_cast<std::size_t>(chain_dim(sites)));
  for (const LabelChain& chain : enumerate_label_chains(sites)) {
    const int m = chain.excitation();
    for (auto& [label, vector] : ladder_states(chain)) {
      SpectrumRecord record;
      record.label = label;
      record.vector = std::move(vector);
      record.h_eigenvalue = label.k - sites;
      for (int h = 2; h <= sites; ++h) {
        record.casimir_eigenvalues.emplace(h, casimir_eigenvalue(h, chain));
      }
      record.hamiltonian_eigenvalue = hamiltonian_eigenvalue(label.k, m, sites, params);
      records.push_back(std::move(record));
    }
  }
  if (records.size() != static_cast<std::size_t>(chain_dim(sites))) {
    throw std::logic_error("full_spectrum: state count mismatch");
  }
  return records;
}

}  // namespace gaudin
