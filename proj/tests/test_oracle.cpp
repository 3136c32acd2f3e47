#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaudin/io.hpp"
#include "gaudin/oracle.hpp"

using namespace gaudin;

namespace {

void expect_pass(const Report& report) {
  INFO("suite " << report.suite);
  for (const Check& check : report.checks) {
    INFO(check.name << ": " << check.witness);
    CHECK(check.pass);
    CHECK(check.witness.empty());
  }
  CHECK(report.pass());
}

}  // namespace

TEST_CASE("homomorphism suite passes") {
  expect_pass(verify_homomorphism(2));
  expect_pass(verify_homomorphism(4));
}

TEST_CASE("commuting family suite passes with the expected pair counts") {
  const Report r2 = verify_commuting_family(2);
  expect_pass(r2);
  // 1 family pair + 2 Hamiltonian samples
  CHECK(r2.checks.size() == 3);

  const Report r4 = verify_commuting_family(4);
  expect_pass(r4);
  // 6 family pairs + 4 Hamiltonian samples
  CHECK(r4.checks.size() == 10);
}

TEST_CASE("kernel suite passes") {
  expect_pass(brute_kernel_check(2));
  expect_pass(brute_kernel_check(3));
  expect_pass(brute_kernel_check(4));
}

TEST_CASE("eigenstate suite passes for several couplings") {
  expect_pass(verify_eigenstates(2, {Rational(1), Rational(1)}));
  expect_pass(verify_eigenstates(3, {Rational(1), Rational(0)}));
  expect_pass(verify_eigenstates(3, {Rational(0), Rational(1)}));
  expect_pass(verify_eigenstates(3, {Rational(2), Rational(3)}));
}

TEST_CASE("spin-form suite passes") {
  expect_pass(verify_spin_form(2));
  expect_pass(verify_spin_form(3));
}

TEST_CASE("sabotaged embeddings fail with a witness") {
  // identity padding instead of parity strings: the harness must notice
  Representation rep = coproduct_rep(3);
  rep.at(GeneratorName::Fplus) = coproduct_ungraded(GeneratorName::Fplus, 3);
  rep.at(GeneratorName::Fminus) = coproduct_ungraded(GeneratorName::Fminus, 3);
  const Report report = verify_defining_relations(rep);
  CHECK_FALSE(report.pass());
  bool f_relation_failed_with_witness = false;
  for (const Check& check : report.checks) {
    if (check.name == "{F+,F-} = H" && !check.pass && !check.witness.empty()) {
      f_relation_failed_with_witness = true;
    }
  }
  CHECK(f_relation_failed_with_witness);
}

TEST_CASE("report serialization shape") {
  const Report report = verify_spin_form(2);
  const nlohmann::ordered_json j = to_json(report);
  CHECK(j.contains("suite"));
  CHECK(j.contains("checks"));
  CHECK(j.contains("pass"));
  CHECK(j["pass"].get<bool>());
  REQUIRE(j["checks"].is_array());
  for (const auto& check : j["checks"]) {
    CHECK(check.contains("name"));
    CHECK(check.contains("pass"));
    CHECK(check.contains("witness"));
  }
}

TEST_CASE("a failing check serializes its witness") {
  Report report;
  report.suite = "synthetic";
  report.add("always fails", false, "entry (0,0) = 1");
  const nlohmann::ordered_json j = to_json(report);
  CHECK_FALSE(j["pass"].get<bool>());
  CHECK(j["checks"][0]["witness"].get<std::string>() == "entry (0,0) = 1");
}
