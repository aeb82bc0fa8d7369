#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wlat {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the full acceptance suite, printing one pass/fail line per criterion.
// Returns the results; a criterion that throws is recorded as failed.
std::vector<CriterionResult> run_acceptance(std::ostream& os);

}  // namespace wlat
