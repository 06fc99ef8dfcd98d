#pragma once

// Exhaustive checks of the label algebra over the full finite label space.

#include <cstddef>
#include <string>
#include <vector>

#include "parityns/symtype.hpp"

namespace parityns {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample, if any
};

/// The 10 part labels: 8 parities, constant, zero.
std::vector<PartLabel> all_part_labels();
/// 10 real labels followed by 100 complex labels.
std::vector<SymLabel> all_labels();

std::vector<CheckResult> run_symtype_selftest();

}  // namespace parityns
