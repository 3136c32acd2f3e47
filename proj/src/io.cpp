#include "gaudin/io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace gaudin {

namespace {

using nlohmann::ordered_json;

ordered_json big_number(const mpz_class& value) {
  // numbers that fit are emitted as JSON integers, larger ones as strings
  if (value.fits_slong_p()) return ordered_json(static_cast<std::int64_t>(value.get_si()));
  return ordered_json(value.get_str());
}

std::string vector_cell(const StateVector& v) {
  std::ostringstream os;
  bool first = true;
  for (StateVector::InnerIterator it(v); it; ++it) {
    if (!first) os << ";";
    os << it.index() << ":" << it.value().str();
    first = false;
  }
  return os.str();
}

std::string chain_cell(const LabelChain& chain) {
  std::ostringstream os;
  bool first = true;
  for (const LabelStep& step : chain.steps) {
    if (!first) os << "|";
    os << step.m << ":" << step.s;
    first = false;
  }
  return os.str();
}

}  // namespace

ordered_json to_json(const StateVector& v) {
  ordered_json entries = ordered_json::array();
  for (StateVector::InnerIterator it(v); it; ++it) {
    entries.push_back({{"index", static_cast<std::int64_t>(it.index())},
                       {"coeff", it.value().str()}});
  }
  return entries;
}

ordered_json to_json(const LabelChain& chain) {
  ordered_json steps = ordered_json::array();
  for (const LabelStep& step : chain.steps) steps.push_back({step.m, step.s});
  return steps;
}

ordered_json to_json(const Report& report) {
  ordered_json checks = ordered_json::array();
  for (const Check& check : report.checks) {
    checks.push_back({{"name", check.name}, {"pass", check.pass}, {"witness", check.witness}});
  }
  return ordered_json{{"suite", report.suite}, {"checks", checks}, {"pass", report.pass()}};
}

ordered_json spectrum_json(int sites, const HamiltonianParams& params,
                           const std::vector<SpectrumRecord>& records) {
  ordered_json states = ordered_json::array();
  for (const SpectrumRecord& record : records) {
    ordered_json casimirs = ordered_json::object();
    for (const auto& [h, value] : record.casimir_eigenvalues) {
      casimirs[std::to_string(h)] = value;
    }
    states.push_back({{"k", record.label.k},
                      {"chain", to_json(record.label.chain)},
                      {"h_eigenvalue", record.h_eigenvalue},
                      {"casimir_eigenvalues", casimirs},
                      {"hamiltonian_eigenvalue", record.hamiltonian_eigenvalue.str()},
                      {"vector", to_json(record.vector)}});
  }
  return ordered_json{{"sites", sites},
                      {"lambda", params.lambda.str()},
                      {"mu", params.mu.str()},
                      {"states", states}};
}

std::string spectrum_csv(int sites, const HamiltonianParams& params,
                         const std::vector<SpectrumRecord>& records) {
  std::ostringstream os;
  os << "sites,lambda,mu,chain,k,h_eigenvalue";
  for (int h = 2; h <= sites; ++h) os << ",casimir_" << h;
  os << ",hamiltonian_eigenvalue,vector\n";
  for (const SpectrumRecord& record : records) {
    os << sites << "," << params.lambda.str() << "," << params.mu.str() << ","
       << chain_cell(record.label.chain) << "," << record.label.k << ","
       << record.h_eigenvalue;
    for (int h = 2; h <= sites; ++h) os << "," << record.casimir_eigenvalues.at(h);
    os << "," << record.hamiltonian_eigenvalue.str() << "," << vector_cell(record.vector)
       << "\n";
  }
  return os.str();
}

ordered_json basis_json(int sites, bool kernel_only, const std::vector<BasisEntry>& entries) {
  ordered_json states = ordered_json::array();
  for (const BasisEntry& entry : entries) {
    states.push_back({{"chain", to_json(entry.chain)},
                      {"k", entry.k},
                      {"vector", to_json(entry.vector)}});
  }
  return ordered_json{{"sites", sites}, {"kernel_only", kernel_only}, {"states", states}};
}

std::string basis_csv(int sites, const std::vector<BasisEntry>& entries) {
  std::ostringstream os;
  os << "sites,chain,k,vector\n";
  for (const BasisEntry& entry : entries) {
    os << sites << "," << chain_cell(entry.chain) << "," << entry.k << ","
       << vector_cell(entry.vector) << "\n";
  }
  return os.str();
}

std::string spin_label(int twice_spin) {
  if (twice_spin % 2 == 0) return std::to_string(twice_spin / 2);
  return std::to_string(twice_spin) + "/2";
}

ordered_json count_json(int sites) {
  const std::map<int, mpz_class> counts = irrep_counts(sites);
  mpz_class kernel_dim(0);
  mpz_class weighted(0);
  ordered_json irreps = ordered_json::object();
  for (const auto& [twice_spin, count] : counts) {
    irreps[spin_label(twice_spin)] = big_number(count);
    kernel_dim += count;
    weighted += count * (2 * twice_spin + 1);  // irrep of spin k has dimension 4k+1
  }
  const mpz_class total = pow3(sites);
  if (weighted != total) {
    throw std::logic_error("count_json: dimension identity violated");
  }
  return ordered_json{{"sites", sites},
                      {"irreps", irreps},
                      {"kernel_dim", big_number(kernel_dim)},
                      {"total_dim", big_number(total)}};
}

}  // namespace gaudin
