#pragma once

#include <span>
#include <vector>

#include "gaudin/algebra.hpp"
#include "gaudin/sparse.hpp"

namespace gaudin {

// Chain basis encoding: one digit per site, with
//   0 = lowest-weight state (e2),  1 = fermionic state (e3),  2 = bosonic (e1).
// Site 1 is most significant: index = sum_s digit_s * 3^(N - s).
// The all-zero string (index 0) is the pseudovacuum; basis parity is the
// number of fermionic digits mod 2.

Index chain_dim(int sites);
int sites_of_dim(Index dim);  // inverse of chain_dim; throws on non-powers of 3

Index basis_index(std::span<const int> digits);
std::vector<int> basis_digits(Index index, int sites);
Parity basis_parity(Index index, int sites);

Parity tensor_degree(std::span<const Parity> parities);

/// Single-site generator matrix rewritten in the chain digit basis.
GradedMatrix site_generator(GeneratorName g);

GradedMatrix chain_identity(int sites);

/// Diagonal sign operator: +1 on even basis states, -1 on odd ones.
/// Squares to the identity; anticommutes with embedded odd generators.
GradedMatrix parity_operator(int sites);

/// Matrix of a (x) b on the graded product space with the Koszul sign:
/// (a (x) b)(v (x) w) = (-1)^{deg b * deg v} (a v) (x) (b w). Satisfies the
/// graded multiplication law (A (x) B)(C (x) D) = (-1)^{deg B deg C} AC (x) BD
/// and is associative. Both factors must act on chain spaces (dims 3^k).
GradedMatrix graded_kron(const GradedMatrix& a, const GradedMatrix& b);

/// The N-site matrix the product notation id x ... x X x ... x id denotes
/// under graded multiplication: even X gets plain identity padding, odd X a
/// left parity string P x ... x P x X x id x ... x id. X is a single-site
/// operator in the digit basis; site runs from 1 to sites.
GradedMatrix embed_at_site(const GradedMatrix& x, int site, int sites);

}  // namespace gaudin
