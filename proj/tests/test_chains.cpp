#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gaudin/chains.hpp"

using namespace gaudin;

namespace {

LabelChain make(int sites, std::initializer_list<LabelStep> steps) {
  LabelChain chain;
  chain.sites = sites;
  chain.steps = steps;
  return chain;
}

}  // namespace

TEST_CASE("two-site chains") {
  const auto chains = enumerate_label_chains(2);
  REQUIRE(chains.size() == 3);
  CHECK(chains[0] == make(2, {}));
  CHECK(chains[1] == make(2, {{1, 2}}));
  CHECK(chains[2] == make(2, {{2, 2}}));
}

TEST_CASE("three-site chains in flattened lexicographic order") {
  const auto chains = enumerate_label_chains(3);
  REQUIRE(chains.size() == 7);
  CHECK(chains[0] == make(3, {}));
  CHECK(chains[1] == make(3, {{1, 2}}));
  CHECK(chains[2] == make(3, {{1, 2}, {2, 3}}));
  CHECK(chains[3] == make(3, {{1, 2}, {3, 3}}));
  CHECK(chains[4] == make(3, {{1, 3}}));
  CHECK(chains[5] == make(3, {{2, 2}}));
  CHECK(chains[6] == make(3, {{2, 3}}));
  CHECK(std::is_sorted(chains.begin(), chains.end(), chain_less));

  // (2,2) cannot extend to (3,3): would need s > m_prev + 1 = 3
  CHECK_FALSE(chain_valid(make(3, {{2, 2}, {3, 3}})));
  CHECK(std::none_of(chains.begin(), chains.end(), [](const LabelChain& c) {
    return c == make(3, {{2, 2}, {3, 3}});
  }));
}

TEST_CASE("single site admits only the pseudovacuum label") {
  const auto chains = enumerate_label_chains(1);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].steps.empty());
  CHECK(chains[0].excitation() == 0);
  CHECK(chains[0].support() == 0);
}

TEST_CASE("chain validity rules") {
  CHECK(chain_valid(make(3, {{1, 2}, {2, 3}})));
  CHECK(chain_valid(make(3, {{1, 2}, {3, 3}})));
  CHECK_FALSE(chain_valid(make(3, {{3, 3}})));        // step of 3
  CHECK_FALSE(chain_valid(make(3, {{1, 1}})));        // s <= m_prev + 1
  CHECK_FALSE(chain_valid(make(3, {{1, 4}})));        // s > N
  CHECK_FALSE(chain_valid(make(3, {{2, 2}, {3, 2}})));  // s not increasing
  CHECK_FALSE(chain_valid(make(2, {{2, 1}})));        // s < m
  CHECK_FALSE(chain_valid(make(0, {})));
  CHECK(make(3, {{1, 2}, {2, 3}}).str() == "(1,2)(2,3)");
  CHECK(make(3, {}).str() == "()");
}

TEST_CASE("multiplicity recurrence") {
  const auto n1 = irrep_counts(1);
  REQUIRE(n1.size() == 1);
  CHECK(n1.at(1) == 1);

  const auto n2 = irrep_counts(2);
  CHECK(n2.at(0) == 1);
  CHECK(n2.at(1) == 1);
  CHECK(n2.at(2) == 1);

  const auto n3 = irrep_counts(3);
  CHECK(n3.at(0) == 1);
  CHECK(n3.at(1) == 3);
  CHECK(n3.at(2) == 2);
  CHECK(n3.at(3) == 1);
  mpz_class total3(0);
  for (const auto& [t, c] : n3) total3 += c;
  CHECK(total3 == 7);
}

TEST_CASE("dimension identity up to twelve sites") {
  for (int sites = 1; sites <= 12; ++sites) {
    mpz_class weighted(0);
    for (const auto& [twice_spin, count] : irrep_counts(sites)) {
      weighted += count * (2 * twice_spin + 1);
    }
    CHECK(weighted == pow3(sites));
  }
}

TEST_CASE("chain count matches the multiplicity total") {
  for (int sites = 1; sites <= 6; ++sites) {
    mpz_class total(0);
    std::map<int, mpz_class> per_spin;
    for (const auto& [twice_spin, count] : irrep_counts(sites)) {
      total += count;
      per_spin[twice_spin] = count;
    }
    const auto chains = enumerate_label_chains(sites);
    CHECK(mpz_class(static_cast<long>(chains.size())) == total);

    // chains grouped by spin (N - m_l) reproduce the per-spin counts
    std::map<int, long> grouped;
    for (const LabelChain& chain : chains) grouped[chain.sites - chain.excitation()] += 1;
    for (const auto& [twice_spin, count] : per_spin) {
      CHECK(mpz_class(grouped[twice_spin]) == count);
    }
  }
}
