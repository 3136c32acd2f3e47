#include "gaudin/algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace gaudin {

Parity parity_of(GeneratorName g) {
  switch (g) {
    case GeneratorName::H:
    case GeneratorName::Eplus:
    case GeneratorName::Eminus:
      return Parity::even;
    case GeneratorName::Fplus:
    case GeneratorName::Fminus:
      return Parity::odd;
  }
  throw std::invalid_argument("parity_of: unknown generator");
}

std::string_view name_of(GeneratorName g) {
  switch (g) {
    case GeneratorName::H: return "H";
    case GeneratorName::Eplus: return "E+";
    case GeneratorName::Eminus: return "E-";
    case GeneratorName::Fplus: return "F+";
    case GeneratorName::Fminus: return "F-";
  }
  throw std::invalid_argument("name_of: unknown generator");
}

GradedMatrix generator(GeneratorName g) {
  std::vector<Triplet> t;
  switch (g) {
    case GeneratorName::H:
      t = {{0, 0, Rational(1)}, {1, 1, Rational(-1)}};
      break;
    case GeneratorName::Eplus:
      t = {{0, 1, Rational(1)}};
      break;
    case GeneratorName::Eminus:
      t = {{1, 0, Rational(1)}};
      break;
    case GeneratorName::Fplus:
      t = {{0, 2, Rational(1)}, {2, 1, Rational(1)}};
      break;
    case GeneratorName::Fminus:
      t = {{1, 2, Rational(-1)}, {2, 0, Rational(1)}};
      break;
  }
  return {from_triplets(3, 3, t), parity_of(g)};
}

Representation fundamental_representation() {
  Representation rep;
  for (GeneratorName g : kGenerators) rep.emplace(g, generator(g));
  return rep;
}

GradedMatrix supercommutator(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) {
    throw std::invalid_argument("supercommutator: dimension mismatch");
  }
  const bool both_odd = a.parity == Parity::odd && b.parity == Parity::odd;
  SparseMat result = both_odd ? SparseMat(a.matrix * b.matrix + b.matrix * a.matrix)
                              : SparseMat(a.matrix * b.matrix - b.matrix * a.matrix);
  return {pruned(std::move(result)), parity_sum(a.parity, b.parity)};
}

std::optional<std::string> diff_witness(const SparseMat& got, const SparseMat& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    return "dimension mismatch";
  }
  SparseMat d = pruned(SparseMat(got - want));
  for (Index k = 0; k < d.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(d, k); it; ++it) {
      std::ostringstream os;
      os << "(" << it.row() << "," << it.col() << "): got "
         << got.coeff(it.row(), it.col()).str() << ", want "
         << want.coeff(it.row(), it.col()).str();
      return os.str();
    }
  }
  return std::nullopt;
}

namespace {

const GradedMatrix& member(const Representation& rep, GeneratorName g) {
  auto it = rep.find(g);
  if (it == rep.end()) {
    throw std::invalid_argument("representation: missing generator " +
                                std::string(name_of(g)));
  }
  return it->second;
}

void check_identity(std::vector<Check>& out, const std::string& name,
                    const GradedMatrix& lhs, const SparseMat& rhs) {
  auto witness = diff_witness(lhs.matrix, rhs);
  out.push_back({name, !witness.has_value(), witness.value_or("")});
}

}  // namespace

std::vector<Check> relation_checks(const Representation& rep) {
  const auto& h = member(rep, GeneratorName::H);
  const auto& ep = member(rep, GeneratorName::Eplus);
  const auto& em = member(rep, GeneratorName::Eminus);
  const auto& fp = member(rep, GeneratorName::Fplus);
  const auto& fm = member(rep, GeneratorName::Fminus);
  const Rational two(2);

  std::vector<Check> checks;
  // each named relation covers both sign variants; first failure wins
  {
    std::vector<Check> parts;
    check_identity(parts, "[H,E+] = 2E+", supercommutator(h, ep), SparseMat(ep.matrix * two));
    check_identity(parts, "[H,E-] = -2E-", supercommutator(h, em), SparseMat(em.matrix * -two));
    checks.push_back({"[H,E+-] = +-2E+-", parts[0].pass && parts[1].pass,
                      !parts[0].pass ? parts[0].name + " " + parts[0].witness
                                     : (!parts[1].pass ? parts[1].name + " " + parts[1].witness : "")});
  }
  check_identity(checks, "[E+,E-] = H", supercommutator(ep, em), h.matrix);
  {
    std::vector<Check> parts;
    check_identity(parts, "[H,F+] = F+", supercommutator(h, fp), fp.matrix);
    check_identity(parts, "[H,F-] = -F-", supercommutator(h, fm), SparseMat(fm.matrix * Rational(-1)));
    checks.push_back({"[H,F+-] = +-F+-", parts[0].pass && parts[1].pass,
                      !parts[0].pass ? parts[0].name + " " + parts[0].witness
                                     : (!parts[1].pass ? parts[1].name + " " + parts[1].witness : "")});
  }
  check_identity(checks, "{F+,F-} = H", supercommutator(fp, fm), h.matrix);
  {
    std::vector<Check> parts;
    check_identity(parts, "[E+,F-] = -F+", supercommutator(ep, fm), SparseMat(fp.matrix * Rational(-1)));
    check_identity(parts, "[E-,F+] = -F-", supercommutator(em, fp), SparseMat(fm.matrix * Rational(-1)));
    checks.push_back({"[E+-,F-+] = -F+-", parts[0].pass && parts[1].pass,
                      !parts[0].pass ? parts[0].name + " " + parts[0].witness
                                     : (!parts[1].pass ? parts[1].name + " " + parts[1].witness : "")});
  }
  {
    std::vector<Check> parts;
    check_identity(parts, "{F+,F+} = 2E+", supercommutator(fp, fp), SparseMat(ep.matrix * two));
    check_identity(parts, "{F-,F-} = -2E-", supercommutator(fm, fm), SparseMat(em.matrix * -two));
    checks.push_back({"{F+-,F+-} = +-2E+-", parts[0].pass && parts[1].pass,
                      !parts[0].pass ? parts[0].name + " " + parts[0].witness
                                     : (!parts[1].pass ? parts[1].name + " " + parts[1].witness : "")});
  }
  return checks;
}

Report verify_defining_relations(const Representation& rep) {
  const Index dim = member(rep, GeneratorName::H).matrix.rows();
  for (GeneratorName g : kGenerators) {
    if (member(rep, g).matrix.rows() != dim || member(rep, g).matrix.cols() != dim) {
      throw std::invalid_argument("verify_defining_relations: dimension mismatch");
    }
  }
  Report report;
  report.suite = "defining-relations";
  report.checks = relation_checks(rep);
  return report;
}

CasimirParts casimir_parts(const Representation& rep) {
  const SparseMat& h = member(rep, GeneratorName::H).matrix;
  const SparseMat& ep = member(rep, GeneratorName::Eplus).matrix;
  const SparseMat& em = member(rep, GeneratorName::Eminus).matrix;
  const SparseMat& fp = member(rep, GeneratorName::Fplus).matrix;
  const SparseMat& fm = member(rep, GeneratorName::Fminus).matrix;

  SparseMat bosonic = pruned(SparseMat(h * h + (ep * em + em * ep) * Rational(2)));
  SparseMat fermionic = pruned(SparseMat(fm * fp - fp * fm));
  SparseMat full = pruned(SparseMat(
      h * h + (ep * em + em * ep) * Rational(2) - (fp * fm - fm * fp)));
  return {{std::move(full), Parity::even},
          {std::move(bosonic), Parity::even},
          {std::move(fermionic), Parity::even}};
}

}  // namespace gaudin
