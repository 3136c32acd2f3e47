#include "gaudin/coproduct.hpp"

#include <stdexcept>

namespace gaudin {

GradedMatrix coproduct(GeneratorName x, int sites) {
  if (sites < 1) throw std::invalid_argument("coproduct: sites must be >= 1");
  const GradedMatrix single = site_generator(x);
  SparseMat sum = embed_at_site(single, 1, sites).matrix;
  for (int site = 2; site <= sites; ++site) {
    sum = SparseMat(sum + embed_at_site(single, site, sites).matrix);
  }
  return {pruned(std::move(sum)), parity_of(x)};
}

GradedMatrix coproduct_by_recursion(GeneratorName x, int sites) {
  if (sites < 1) throw std::invalid_argument("coproduct_by_recursion: sites must be >= 1");
  if (sites == 1) return site_generator(x);
  const GradedMatrix inner = coproduct_by_recursion(x, sites - 1);
  const GradedMatrix left = graded_kron(inner, chain_identity(1));
  const GradedMatrix right = graded_kron(chain_identity(sites - 1), site_generator(x));
  return {pruned(SparseMat(left.matrix + right.matrix)), parity_of(x)};
}

GradedMatrix coproduct_ungraded(GeneratorName x, int sites) {
  if (sites < 1) throw std::invalid_argument("coproduct_ungraded: sites must be >= 1");
  // identity padding on both sides regardless of parity: wrong for odd
  // generators, kept to exercise the failure paths of the checkers
  GradedMatrix masked{site_generator(x).matrix, Parity::even};
  SparseMat sum = embed_at_site(masked, 1, sites).matrix;
  for (int site = 2; site <= sites; ++site) {
    sum = SparseMat(sum + embed_at_site(masked, site, sites).matrix);
  }
  return {pruned(std::move(sum)), parity_of(x)};
}

Representation coproduct_rep(int sites) {
  Representation rep;
  for (GeneratorName g : kGenerators) rep.emplace(g, coproduct(g, sites));
  return rep;
}

GradedMatrix partial_casimir(int h, int sites) {
  if (h < 2 || h > sites) throw std::invalid_argument("partial_casimir: h out of range");
  const CasimirParts parts = casimir_parts(coproduct_rep(h));
  return graded_kron(parts.full, chain_identity(sites - h));
}

GradedMatrix general_hamiltonian(int sites, const HamiltonianParams& params) {
  if (sites < 1) throw std::invalid_argument("general_hamiltonian: sites must be >= 1");
  const CasimirParts parts = casimir_parts(coproduct_rep(sites));
  return {pruned(SparseMat(parts.bosonic.matrix * params.lambda +
                           parts.fermionic.matrix * params.mu)),
          Parity::even};
}

SparseMat spin_exchange_sum(int sites) {
  if (sites < 2) throw std::invalid_argument("spin_exchange_sum: sites must be >= 2");
  std::vector<SparseMat> h(sites), ep(sites), em(sites), fp(sites), fm(sites);
  for (int i = 0; i < sites; ++i) {
    h[i] = embed_at_site(site_generator(GeneratorName::H), i + 1, sites).matrix;
    ep[i] = embed_at_site(site_generator(GeneratorName::Eplus), i + 1, sites).matrix;
    em[i] = embed_at_site(site_generator(GeneratorName::Eminus), i + 1, sites).matrix;
    fp[i] = embed_at_site(site_generator(GeneratorName::Fplus), i + 1, sites).matrix;
    fm[i] = embed_at_site(site_generator(GeneratorName::Fminus), i + 1, sites).matrix;
  }
  SparseMat sum(chain_dim(sites), chain_dim(sites));
  for (int i = 0; i < sites; ++i) {
    for (int j = 0; j < sites; ++j) {
      if (i == j) continue;
      sum = SparseMat(sum + h[i] * h[j] + (ep[i] * em[j] + em[i] * ep[j]) * Rational(2) -
                      fp[i] * fm[j] + fm[i] * fp[j]);
    }
  }
  return pruned(std::move(sum));
}

GradedMatrix gaudin_spin_form(int sites) {
  if (sites < 2) throw std::invalid_argument("gaudin_spin_form: sites must be >= 2");
  SparseMat sum = spin_exchange_sum(sites);
  return {pruned(SparseMat(sum + identity(chain_dim(sites)) * Rational(2 * sites))),
          Parity::even};
}

Report verify_coassociativity() {
  Report report;
  report.suite = "coassociativity";
  for (GeneratorName g : kGenerators) {
    const GradedMatrix x = site_generator(g);
    // (Delta (x) id) Delta
    const SparseMat left =
        SparseMat(graded_kron(coproduct(g, 2), chain_identity(1)).matrix +
                  graded_kron(chain_identity(2), x).matrix);
    // (id (x) Delta) Delta
    const SparseMat right =
        SparseMat(graded_kron(x, chain_identity(2)).matrix +
                  graded_kron(chain_identity(1), coproduct(g, 2)).matrix);
    auto witness = diff_witness(pruned(left), pruned(right));
    report.add(std::string("both groupings agree for ") + std::string(name_of(g)),
               !witness.has_value(), witness.value_or(""));
  }
  return report;
}

ObservableFamily observable_family(int sites) {
  if (sites < 1) throw std::invalid_argument("observable_family: sites must be >= 1");
  ObservableFamily family;
  family.sites = sites;
  family.delta_h = coproduct(GeneratorName::H, sites);
  for (int h = 2; h <= sites; ++h) {
    family.partial_casimirs.emplace(h, partial_casimir(h, sites));
  }
  return family;
}

}  // namespace gaudin
