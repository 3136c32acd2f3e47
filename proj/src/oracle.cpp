#include "gaudin/oracle.hpp"

#include <sstream>
#include <stdexcept>

#include "gaudin/elimination.hpp"

namespace gaudin {
namespace {

std::string first_entry_witness(const SparseMat& m) {
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(m, k); it; ++it) {
      if (!it.value().is_zero()) {
        std::ostringstream os;
        os << "(" << it.row() << "," << it.col() << ") = " << it.value().str();
        return os.str();
      }
    }
  }
  return "";
}

std::string first_entry_witness(const StateVector& v) {
  for (StateVector::InnerIterator it(v); it; ++it) {
    if (!it.value().is_zero()) {
      std::ostringstream os;
      os << "index " << it.index() << " = " << it.value().str();
      return os.str();
    }
  }
  return "";
}

void check_commutes(Report& report, const std::string& name, const SparseMat& a,
                    const SparseMat& b) {
  const SparseMat commutator = pruned(SparseMat(a * b - b * a));
  const bool ok = is_zero(commutator);
  report.add(name, ok, ok ? "" : "commutator entry " + first_entry_witness(commutator));
}

}  // namespace

Report verify_homomorphism(int sites) {
  if (sites < 2) throw std::invalid_argument("verify_homomorphism: sites must be >= 2");
  Report report;
  report.suite = "homomorphism N=" + std::to_string(sites);
  report.checks = relation_checks(coproduct_rep(sites));
  for (Check& check : verify_coassociativity().checks) {
    check.name = "coassociativity: " + check.name;
    report.checks.push_back(std::move(check));
  }
  return report;
}

Report verify_commuting_family(int sites) {
  if (sites < 2) throw std::invalid_argument("verify_commuting_family: sites must be >= 2");
  Report report;
  report.suite = "commuting-family N=" + std::to_string(sites);

  const ObservableFamily family = observable_family(sites);
  std::vector<std::pair<std::string, const SparseMat*>> members;
  members.emplace_back("deltaH", &family.delta_h.matrix);
  for (const auto& [h, casimir] : family.partial_casimirs) {
    members.emplace_back("C" + std::to_string(h), &casimir.matrix);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      check_commutes(report, "[" + members[i].first + "," + members[j].first + "] = 0",
                     *members[i].second, *members[j].second);
    }
  }

  const GradedMatrix sample = general_hamiltonian(sites, {Rational(2), Rational(3)});
  for (const auto& [name, matrix] : members) {
    check_commutes(report, "[general(2,3)," + name + "] = 0", sample.matrix, *matrix);
  }
  return report;
}

Report brute_kernel_check(int sites) {
  if (sites < 1) throw std::invalid_argument("brute_kernel_check: sites must be >= 1");
  Report report;
  report.suite = "kernel N=" + std::to_string(sites);

  const SparseMat lowering = coproduct(GeneratorName::Fminus, sites).matrix;
  const std::vector<StateVector> nullspace = nullspace_basis(lowering);
  const std::vector<LabelChain> chains = enumerate_label_chains(sites);

  mpz_class multiplicity_total(0);
  for (const auto& [twice_spin, count] : irrep_counts(sites)) multiplicity_total += count;

  report.add("nullspace dimension equals chain count", nullspace.size() == chains.size(),
             "nullspace " + std::to_string(nullspace.size()) + ", chains " +
                 std::to_string(chains.size()));
  report.add("nullspace dimension equals multiplicity total",
             mpz_class(static_cast<long>(nullspace.size())) == multiplicity_total,
             "nullspace " + std::to_string(nullspace.size()) + ", multiplicities " +
                 multiplicity_total.get_str());

  std::vector<StateVector> states;
  states.reserve(chains.size());
  for (const LabelChain& chain : chains) {
    StateVector state = kernel_state(chain);
    const StateVector residual = mat_apply(lowering, state);
    const bool ok = is_zero(residual);
    report.add("kernel state annihilated: " + chain.str(), ok,
               ok ? "" : "residual " + first_entry_witness(residual));
    states.push_back(std::move(state));
  }

  const int r = rank(states);
  report.add("kernel states linearly independent",
             r == static_cast<int>(chains.size()),
             "rank " + std::to_string(r) + " of " + std::to_string(chains.size()));
  return report;
}

Report verify_eigenstates(int sites, const HamiltonianParams& params) {
  if (sites < 1) throw std::invalid_argument("verify_eigenstates: sites must be >= 1");
  Report report;
  report.suite = "eigenstates N=" + std::to_string(sites) + " lambda=" +
                 params.lambda.str() + " mu=" + params.mu.str();

  const std::vector<SpectrumRecord> records = full_spectrum(sites, params);
  const SparseMat weight = coproduct(GeneratorName::H, sites).matrix;
  const SparseMat hamiltonian = general_hamiltonian(sites, params).matrix;
  std::map<int, SparseMat> casimirs;
  for (int h = 2; h <= sites; ++h) casimirs.emplace(h, partial_casimir(h, sites).matrix);

  const auto eigen_check = [&](const std::string& name, const SparseMat& observable,
                               auto eigenvalue_of) {
    for (const SpectrumRecord& record : records) {
      const StateVector expected =
          pruned(StateVector(record.vector * eigenvalue_of(record)));
      if (!exact_equal(mat_apply(observable, record.vector), expected)) {
        report.add(name, false,
                   "state chain " + record.label.chain.str() + " k=" +
                       std::to_string(record.label.k));
        return;
      }
    }
    report.add(name, true);
  };

  eigen_check("weight eigenvalue k - N on all states", weight,
              [](const SpectrumRecord& r) { return Rational(r.h_eigenvalue); });
  for (const auto& [h, casimir] : casimirs) {
    eigen_check("C" + std::to_string(h) + " eigenvalue on all states", casimir,
                [h = h](const SpectrumRecord& r) {
                  return Rational(r.casimir_eigenvalues.at(h));
                });
  }
  eigen_check("hamiltonian eigenvalue on all states", hamiltonian,
              [](const SpectrumRecord& r) { return r.hamiltonian_eigenvalue; });

  std::vector<StateVector> vectors;
  vectors.reserve(records.size());
  for (const SpectrumRecord& record : records) vectors.push_back(record.vector);
  const int r = rank(vectors);
  report.add("completeness: rank equals 3^N", r == static_cast<int>(records.size()),
             "rank " + std::to_string(r) + " of " + std::to_string(records.size()));
  return report;
}

Report verify_spin_form(int sites) {
  if (sites < 2) throw std::invalid_argument("verify_spin_form: sites must be >= 2");
  Report report;
  report.suite = "spin-form N=" + std::to_string(sites);

  const SparseMat casimir = partial_casimir(sites, sites).matrix;
  const SparseMat exchange = spin_exchange_sum(sites);
  const SparseMat with_2n =
      pruned(SparseMat(exchange + identity(chain_dim(sites)) * Rational(2 * sites)));
  auto witness = diff_witness(with_2n, casimir);
  report.add("exchange sum + 2N = Delta^(N)(C)", !witness.has_value(), witness.value_or(""));

  // the constant is pinned: shifting it to N must break the identity
  const SparseMat with_n =
      pruned(SparseMat(exchange + identity(chain_dim(sites)) * Rational(sites)));
  auto same = diff_witness(with_n, casimir);
  report.add("exchange sum + N differs from Delta^(N)(C)", same.has_value(),
             "no difference found");
  return report;
}

}  // namespace gaudin
