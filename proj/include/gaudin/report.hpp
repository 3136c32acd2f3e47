#pragma once

#include <string>
#include <vector>

namespace gaudin {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // nonempty exactly when the check failed
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string witness_on_fail = {});
  bool pass() const;
};

}  // namespace gaudin
