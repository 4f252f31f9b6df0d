#pragma once

#include <string>
#include <vector>

namespace softedge::verify {

// Outcome of one criterion of the acceptance battery.
struct CriterionResult {
  int index = 0;        // 1-based battery position
  std::string name;     // stable kebab-case identifier
  bool pass = false;
  std::string detail;   // measured numbers behind the verdict
  double seconds = 0.0; // wall-clock time
};

// Stable criterion names in battery order (size 9).
const std::vector<std::string>& criterion_names();

// 1-based index for a criterion name; 0 when the name is unknown.
int criterion_index(const std::string& name);

// Runs a single criterion (1..9).  threads <= 0 resolves the worker count
// from SOFTEDGE_THREADS or the hardware.  Throws std::domain_error for an
// out-of-range index; never throws for a failing criterion - failures are
// reported in the result.
CriterionResult run_criterion(int index, int threads = 0);

}  // namespace softedge::verify
