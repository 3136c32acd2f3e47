#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gaudin/report.hpp"
#include "gaudin/sparse.hpp"

namespace gaudin {

enum class Parity : int { even = 0, odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// The five generators: H, E+, E- are bosonic (even), F+, F- fermionic (odd).
enum class GeneratorName { H, Eplus, Eminus, Fplus, Fminus };

inline constexpr std::array<GeneratorName, 5> kGenerators{
    GeneratorName::H, GeneratorName::Eplus, GeneratorName::Eminus,
    GeneratorName::Fplus, GeneratorName::Fminus};

Parity parity_of(GeneratorName g);
std::string_view name_of(GeneratorName g);

/// A sparse operator of definite parity. Odd operators shift the parity of
/// every definite-parity vector they act on; even ones preserve it.
struct GradedMatrix {
  SparseMat matrix;
  Parity parity = Parity::even;
};

/// The 3x3 fundamental matrices in the basis order e1, e2, e3
/// (e1 = (1,0,0)^T highest weight, e2 = lowest weight, e3 = fermionic).
GradedMatrix generator(GeneratorName g);

using Representation = std::map<GeneratorName, GradedMatrix>;

Representation fundamental_representation();

/// AB - (-1)^{deg A deg B} BA: the anticommutator when both arguments are
/// odd, the commutator otherwise. Result parity is the mod-2 sum.
GradedMatrix supercommutator(const GradedMatrix& a, const GradedMatrix& b);

/// One check per defining relation (six in total), exact matrix equality.
std::vector<Check> relation_checks(const Representation& rep);

/// Throws std::invalid_argument unless all five generators are present
/// with equal dimensions.
Report verify_defining_relations(const Representation& rep);

/// C = H^2 + 2(E+E- + E-E+) - (F+F- - F-F+), split into its bosonic part
/// C_b = H^2 + 2(E+E- + E-E+) and fermionic part C_f = F-F+ - F+F-,
/// so that C = C_b + C_f holds exactly.
struct CasimirParts {
  GradedMatrix full;
  GradedMatrix bosonic;
  GradedMatrix fermionic;
};

CasimirParts casimir_parts(const Representation& rep);

/// Witness string "(r,c): got ..., want ..." for the first differing entry
/// in column-major order, or nullopt when the matrices agree exactly.
std::optional<std::string> diff_witness(const SparseMat& got, const SparseMat& want);

}  // namespace gaudin
