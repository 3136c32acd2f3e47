#include "gaudin/report.hpp"

#include <algorithm>
#include <utility>

namespace gaudin {

void Report::add(std::string name, bool ok, std::string witness_on_fail) {
  checks.push_back({std::move(name), ok, ok ? std::string() : std::move(witness_on_fail)});
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

}  // namespace gaudin
