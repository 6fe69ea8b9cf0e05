#pragma once
// Acceptance matrix: the pinned property sweeps that gate a release. Each
// criterion runs an independent exhaustive or frozen-bound check and reports
// a pass flag plus a short account of what was covered.

#include <string>
#include <vector>

namespace dhckit {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // counts and witnesses, stable across runs
  double seconds = 0.0;
};

int criterion_count();

// run one criterion, 1-based; throws std::out_of_range on unknown numbers
CriterionResult run_criterion(int number);

// the full matrix, in order
std::vector<CriterionResult> run_acceptance();

}  // namespace dhckit
