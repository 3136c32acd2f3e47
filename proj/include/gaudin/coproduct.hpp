#pragma once

#include <map>

#include "gaudin/tensor.hpp"

namespace gaudin {

/// Delta^(N)(X) = sum over sites of the graded embedding of X; equals the
/// recursive (Delta^(N-1) (x) id) Delta^(2) evaluation exactly.
GradedMatrix coproduct(GeneratorName x, int sites);

/// Same operator built through the two-site recursion; kept as an
/// independent evaluation path for tests.
GradedMatrix coproduct_by_recursion(GeneratorName x, int sites);

/// Deliberately wrong embedding (identity padding for odd generators too).
/// Breaks the fermionic relations; used to prove the checkers can fail.
GradedMatrix coproduct_ungraded(GeneratorName x, int sites);

/// All five coproduct images on the N-site space.
Representation coproduct_rep(int sites);

/// C_h = Delta^(h)(C) on the first h sites, identity-padded to N sites.
/// Requires 2 <= h <= sites.
GradedMatrix partial_casimir(int h, int sites);

struct HamiltonianParams {
  Rational lambda{1};
  Rational mu{1};
};

/// lambda * Delta^(N)(C_b) + mu * Delta^(N)(C_f). Equals
/// mu * Delta^(N)(C) + (lambda - mu) * Delta^(N)(C_b) exactly, and
/// collapses to Delta^(N)(C) at lambda = mu = 1.
GradedMatrix general_hamiltonian(int sites, const HamiltonianParams& params = {});

/// sum_{i != j} [ H_i H_j + 2(E+_i E-_j + E-_i E+_j) - F+_i F-_j + F-_i F+_j ]
/// with graded embeddings throughout; no constant term.
SparseMat spin_exchange_sum(int sites);

/// Spin-spin form of the chain Hamiltonian: the exchange sum plus 2N times
/// the identity. Coincides with Delta^(N)(C) as an exact matrix identity.
GradedMatrix gaudin_spin_form(int sites);

/// Both parenthesizations of the three-site coproduct, one check per
/// generator, exact matrix equality.
Report verify_coassociativity();

/// The commuting set { Delta^(N)(H), C_2, ..., C_N }.
struct ObservableFamily {
  int sites = 0;
  GradedMatrix delta_h;
  std::map<int, GradedMatrix> partial_casimirs;  // keyed by h
};

ObservableFamily observable_family(int sites);

}  // namespace gaudin
