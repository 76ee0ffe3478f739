#pragma once

#include <string>
#include <vector>

namespace redchev {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch, empty on pass
};

// Runs the full invariant suite over the standard desk-scale field sweep
// (odd q in {3,5,7,9,11,13}, even q in {2,4,8,16}, all valid alpha, plus
// the dedicated key-exchange and trigonometry field sets).  quick trims
// the sweep for fast iteration.  Never throws; failures are reported in
// the results.
std::vector<CheckResult> run_selftest(bool quick);

}  // namespace redchev
