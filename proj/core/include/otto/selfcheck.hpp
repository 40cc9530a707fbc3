#pragma once

// The invariant and regression suite behind `otto verify`.

#include <string>
#include <vector>

namespace otto {

struct CheckOutcome {
  std::string name;
  bool passed;
  std::string detail;
};

struct SelfCheckOptions {
  unsigned threads = 0;
  bool include_ensembles = true;  // the Monte Carlo checks dominate the runtime
};

std::vector<CheckOutcome> run_self_checks(const SelfCheckOptions& options = {});

}  // namespace otto
