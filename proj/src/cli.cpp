#include "gaudin/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "gaudin/io.hpp"
#include "gaudin/oracle.hpp"

namespace gaudin {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct RunConfig {
  int sites = 0;
  std::string lambda = "1";
  std::string mu = "1";
  std::string out;
  std::string format = "json";
  std::string suite = "all";
  bool kernel_only = false;
  int max_sites = 6;  // 3^6 = 729 is the largest desk-scale space by default
};

int write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file '" << cfg.out << "'\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

bool parse_params(const RunConfig& cfg, HamiltonianParams& params) {
  try {
    params.lambda = Rational::parse(cfg.lambda);
    params.mu = Rational::parse(cfg.mu);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return false;
  }
  return true;
}

bool guard_sites(const RunConfig& cfg) {
  if (cfg.sites > cfg.max_sites) {
    std::cerr << "error: sites " << cfg.sites << " exceeds max-sites " << cfg.max_sites
              << " (raise --max-sites to override)\n";
    return false;
  }
  return true;
}

int cmd_spectrum(const RunConfig& cfg) {
  if (!guard_sites(cfg)) return kExitGuard;
  HamiltonianParams params;
  if (!parse_params(cfg, params)) return kExitUsage;
  const std::vector<SpectrumRecord> records = full_spectrum(cfg.sites, params);
  if (cfg.format == "csv") {
    return write_output(cfg, spectrum_csv(cfg.sites, params, records));
  }
  return write_output(cfg, spectrum_json(cfg.sites, params, records).dump(2) + "\n");
}

int cmd_basis(const RunConfig& cfg) {
  if (!guard_sites(cfg)) return kExitGuard;
  std::vector<BasisEntry> entries;
  for (const LabelChain& chain : enumerate_label_chains(cfg.sites)) {
    if (cfg.kernel_only) {
      entries.push_back({chain, chain.excitation(), kernel_state(chain)});
    } else {
      for (auto& [label, vector] : ladder_states(chain)) {
        entries.push_back({chain, label.k, std::move(vector)});
      }
    }
  }
  if (cfg.format == "csv") {
    return write_output(cfg, basis_csv(cfg.sites, entries));
  }
  return write_output(cfg, basis_json(cfg.sites, cfg.kernel_only, entries).dump(2) + "\n");
}

int cmd_count(const RunConfig& cfg) {
  return write_output(cfg, count_json(cfg.sites).dump(2) + "\n");
}

int cmd_verify(const RunConfig& cfg) {
  if (!guard_sites(cfg)) return kExitGuard;
  HamiltonianParams params;
  if (!parse_params(cfg, params)) return kExitUsage;

  std::vector<Report> reports;
  if (cfg.suite == "relations" || cfg.suite == "all") {
    reports.push_back(verify_homomorphism(cfg.sites));
  }
  if (cfg.suite == "family" || cfg.suite == "all") {
    reports.push_back(verify_commuting_family(cfg.sites));
  }
  if (cfg.suite == "kernel" || cfg.suite == "all") {
    reports.push_back(brute_kernel_check(cfg.sites));
  }
  if (cfg.suite == "eigen" || cfg.suite == "all") {
    reports.push_back(verify_eigenstates(cfg.sites, params));
  }
  if (cfg.suite == "spinform" || cfg.suite == "all") {
    reports.push_back(verify_spin_form(cfg.sites));
  }

  bool all_pass = true;
  for (const Report& report : reports) all_pass = all_pass && report.pass();

  std::string text;
  if (reports.size() == 1) {
    text = to_json(reports.front()).dump(2) + "\n";
  } else {
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const Report& report : reports) suites.push_back(to_json(report));
    text = nlohmann::ordered_json{{"sites", cfg.sites}, {"suites", suites}, {"pass", all_pass}}
               .dump(2) +
           "\n";
  }
  const int write_rc = write_output(cfg, text);
  if (write_rc != kExitOk) return write_rc;
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Exact spectrum of the supersymmetric spin-1/2 chain: all 3^N "
               "simultaneous eigenstates of the commuting observable family, in "
               "exact rational arithmetic."};
  app.require_subcommand(1);

  RunConfig cfg;

  const auto add_sites = [&cfg](CLI::App* cmd, int min_sites = 1) {
    cmd->add_option("--sites", cfg.sites, "number of chain sites N")
        ->required()
        ->check(CLI::Range(min_sites, 19));
  };
  const auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--out", cfg.out, "output path (default: stdout)");
    cmd->add_option("--max-sites", cfg.max_sites, "guard for matrix-building commands")
        ->check(CLI::Range(1, 19));
  };
  const auto add_format = [&cfg](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_params = [&cfg](CLI::App* cmd) {
    cmd->add_option("--lambda", cfg.lambda, "bosonic coupling, rational p/q");
    cmd->add_option("--mu", cfg.mu, "fermionic coupling, rational p/q");
  };

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "emit all 3^N eigenstates with their exact eigenvalues");
  add_sites(spectrum);
  add_params(spectrum);
  add_format(spectrum);
  add_common(spectrum);

  CLI::App* verify = app.add_subcommand("verify", "run brute-force verification suites");
  add_sites(verify, 2);
  add_params(verify);
  verify->add_option("--suite", cfg.suite, "relations|family|kernel|eigen|spinform|all")
      ->check(CLI::IsMember({"relations", "family", "kernel", "eigen", "spinform", "all"}));
  add_common(verify);

  CLI::App* count = app.add_subcommand(
      "count", "multiplicities of the irreducible components (no matrices built)");
  count->add_option("--sites", cfg.sites, "number of chain sites N")
      ->required()
      ->check(CLI::Range(1, 10000));  // counting never builds matrices
  count->add_option("--out", cfg.out, "output path (default: stdout)");

  CLI::App* basis = app.add_subcommand("basis", "emit the lowest-weight or full ladder basis");
  add_sites(basis);
  basis->add_flag("--kernel-only", cfg.kernel_only, "lowest-weight states only");
  add_format(basis);
  add_common(basis);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (count->parsed()) return cmd_count(cfg);
    if (basis->parsed()) return cmd_basis(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gaudin
