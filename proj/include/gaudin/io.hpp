#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "gaudin/chains.hpp"
#include "gaudin/eigenbasis.hpp"
#include "gaudin/report.hpp"

namespace gaudin {

// Stable serialization. Rationals are always strings ("p/q" or "p"),
// vector entries are listed by ascending index, and object keys keep the
// documented order, so identical inputs produce identical bytes.

nlohmann::ordered_json to_json(const StateVector& v);
nlohmann::ordered_json to_json(const LabelChain& chain);
nlohmann::ordered_json to_json(const Report& report);

nlohmann::ordered_json spectrum_json(int sites, const HamiltonianParams& params,
                                     const std::vector<SpectrumRecord>& records);
std::string spectrum_csv(int sites, const HamiltonianParams& params,
                         const std::vector<SpectrumRecord>& records);

struct BasisEntry {
  LabelChain chain;
  int k = 0;
  StateVector vector;
};

nlohmann::ordered_json basis_json(int sites, bool kernel_only,
                                  const std::vector<BasisEntry>& entries);
std::string basis_csv(int sites, const std::vector<BasisEntry>& entries);

/// {"sites":N,"irreps":{...},"kernel_dim":...,"total_dim":...}; asserts the
/// dimension identity sum count*(4k+1) = 3^N before emitting.
nlohmann::ordered_json count_json(int sites);

/// "0", "1/2", "1", "3/2", ... from twice the spin.
std::string spin_label(int twice_spin);

}  // namespace gaudin
