#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gaudin/coproduct.hpp"
#include "gaudin/elimination.hpp"
#include "test_util.hpp"

using namespace gaudin;
using testutil::combo;
using testutil::ket;

namespace {

// complete supercommutator table on the generator basis
struct BracketEntry {
  GeneratorName a;
  GeneratorName b;
  std::vector<std::pair<long, GeneratorName>> result;
};

const std::vector<BracketEntry>& bracket_table() {
  using enum GeneratorName;
  static const std::vector<BracketEntry> table = {
      {H, H, {}},
      {H, Eplus, {{2, Eplus}}},
      {H, Eminus, {{-2, Eminus}}},
      {H, Fplus, {{1, Fplus}}},
      {H, Fminus, {{-1, Fminus}}},
      {Eplus, Eplus, {}},
      {Eplus, Eminus, {{1, H}}},
      {Eplus, Fplus, {}},
      {Eplus, Fminus, {{-1, Fplus}}},
      {Eminus, Eminus, {}},
      {Eminus, Fplus, {{-1, Fminus}}},
      {Eminus, Fminus, {}},
      {Fplus, Fplus, {{2, Eplus}}},
      {Fplus, Fminus, {{1, H}}},
      {Fminus, Fminus, {{-2, Eminus}}},
  };
  return table;
}

}  // namespace

TEST_CASE("coproduct basics") {
  CHECK(exact_equal(mat_apply(coproduct(GeneratorName::H, 2).matrix, ket("00")),
                    combo({{"00", -2}})));
  CHECK(exact_equal(mat_apply(coproduct(GeneratorName::Fplus, 2).matrix, ket("00")),
                    combo({{"10", 1}, {"01", 1}})));
  CHECK(coproduct(GeneratorName::Fplus, 2).parity == Parity::odd);
  CHECK(coproduct(GeneratorName::H, 3).parity == Parity::even);
  CHECK_THROWS_AS(coproduct(GeneratorName::H, 0), std::invalid_argument);
}

TEST_CASE("coproduct weight diagonal") {
  for (int sites = 1; sites <= 4; ++sites) {
    const SparseMat h = coproduct(GeneratorName::H, sites).matrix;
    for (Index i = 0; i < chain_dim(sites); ++i) {
      long weight = 0;
      for (int d : basis_digits(i, sites)) weight += d == 0 ? -1 : (d == 2 ? 1 : 0);
      CHECK(h.coeff(i, i) == Rational(weight));
      CHECK(mat_apply(h, unit_vector(chain_dim(sites), i)).nonZeros() ==
            (weight == 0 ? 0 : 1));
    }
  }
}

TEST_CASE("coproduct is a homomorphism for every generator pair") {
  for (int sites = 2; sites <= 3; ++sites) {
    const Representation rep = coproduct_rep(sites);
    for (const BracketEntry& entry : bracket_table()) {
      const GradedMatrix lhs = supercommutator(rep.at(entry.a), rep.at(entry.b));
      SparseMat rhs(chain_dim(sites), chain_dim(sites));
      for (const auto& [coeff, g] : entry.result) {
        rhs = SparseMat(rhs + rep.at(g).matrix * Rational(coeff));
      }
      INFO("[" << name_of(entry.a) << "," << name_of(entry.b) << "] at N=" << sites);
      CHECK(exact_equal(lhs.matrix, pruned(rhs)));
    }
  }
}

TEST_CASE("direct sum-of-embeddings equals the recursive evaluation") {
  for (int sites = 1; sites <= 4; ++sites) {
    for (GeneratorName g : kGenerators) {
      CHECK(exact_equal(coproduct(g, sites).matrix,
                        coproduct_by_recursion(g, sites).matrix));
    }
  }
}

TEST_CASE("coassociativity of the three-site coproduct") {
  const Report report = verify_coassociativity();
  REQUIRE(report.checks.size() == 5);
  for (const Check& check : report.checks) {
    INFO(check.name << ": " << check.witness);
    CHECK(check.pass);
  }
}

TEST_CASE("coproducts of the bosonic raisers are squares of the fermionic ones") {
  for (int sites = 2; sites <= 3; ++sites) {
    const SparseMat fp = coproduct(GeneratorName::Fplus, sites).matrix;
    const SparseMat fm = coproduct(GeneratorName::Fminus, sites).matrix;
    CHECK(exact_equal(coproduct(GeneratorName::Eplus, sites).matrix,
                      pruned(SparseMat(fp * fp))));
    CHECK(exact_equal(coproduct(GeneratorName::Eminus, sites).matrix,
                      pruned(SparseMat(fm * fm * Rational(-1)))));
  }
}

TEST_CASE("ungraded embedding breaks the fermionic relations") {
  const GradedMatrix fp = coproduct_ungraded(GeneratorName::Fplus, 2);
  const GradedMatrix fm = coproduct_ungraded(GeneratorName::Fminus, 2);
  const SparseMat h = coproduct(GeneratorName::H, 2).matrix;
  CHECK_FALSE(exact_equal(supercommutator(fp, fm).matrix, h));
}

TEST_CASE("partial Casimir values and commutation") {
  const StateVector vac2 = ket("00");
  CHECK(exact_equal(mat_apply(partial_casimir(2, 2).matrix, vac2),
                    pruned(StateVector(vac2 * Rational(6)))));

  const SparseMat c23 = partial_casimir(2, 3).matrix;
  const SparseMat c33 = partial_casimir(3, 3).matrix;
  CHECK(is_zero(SparseMat(c23 * c33 - c33 * c23)));

  // C_h is even and commutes with the weight operator: applying it never
  // leaves a weight eigenspace
  const SparseMat h3 = coproduct(GeneratorName::H, 3).matrix;
  CHECK(is_zero(SparseMat(c23 * h3 - h3 * c23)));

  CHECK_THROWS_AS(partial_casimir(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(partial_casimir(4, 3), std::invalid_argument);
}

TEST_CASE("kernel dimensions of the lowering coproduct") {
  CHECK(nullspace_basis(coproduct(GeneratorName::Fminus, 2).matrix).size() == 3);
  CHECK(nullspace_basis(coproduct(GeneratorName::Fminus, 3).matrix).size() == 7);
}

TEST_CASE("general Hamiltonian") {
  for (int sites = 2; sites <= 3; ++sites) {
    // lambda = mu collapses to the full Casimir
    CHECK(exact_equal(general_hamiltonian(sites, {Rational(1), Rational(1)}).matrix,
                      partial_casimir(sites, sites).matrix));

    // lambda C_b + mu C_f = mu C + (lambda - mu) C_b
    const HamiltonianParams params{Rational(2), Rational(3)};
    const CasimirParts parts = casimir_parts(coproduct_rep(sites));
    const SparseMat expected =
        pruned(SparseMat(parts.full.matrix * params.mu +
                         parts.bosonic.matrix * (params.lambda - params.mu)));
    CHECK(exact_equal(general_hamiltonian(sites, params).matrix, expected));
  }
}

TEST_CASE("spin-spin form of the chain Hamiltonian") {
  for (int sites = 2; sites <= 3; ++sites) {
    CHECK(exact_equal(gaudin_spin_form(sites).matrix,
                      partial_casimir(sites, sites).matrix));
    // vacuum expectation of the exchange sum: N(N-1) from the weight terms
    CHECK(spin_exchange_sum(sites).coeff(0, 0) ==
          Rational(static_cast<long>(sites) * (sites - 1)));
  }
  CHECK_THROWS_AS(gaudin_spin_form(1), std::invalid_argument);
}

TEST_CASE("observable family shape") {
  const ObservableFamily family = observable_family(4);
  CHECK(family.sites == 4);
  CHECK(family.partial_casimirs.size() == 3);
  CHECK(family.delta_h.matrix.rows() == 81);
  CHECK(family.partial_casimirs.at(2).matrix.rows() == 81);
}
