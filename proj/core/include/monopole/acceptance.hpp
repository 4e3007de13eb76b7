#pragma once

#include <string>
#include <vector>

namespace monopole {

/// One acceptance criterion outcome. Tolerances are pinned in the
/// implementation; `detail` carries the measured numbers.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Run the full acceptance suite. tolerance_scale > 1 loosens every pinned
/// tolerance by that factor (diagnostic use only).
std::vector<CriterionResult> run_acceptance(double tolerance_scale = 1.0);

}  // namespace monopole
