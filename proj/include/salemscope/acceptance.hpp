#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace salemscope {

// Outcome of one acceptance criterion (ids 1..10).
struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string detail;  // one-line summary with the measured values
    double seconds = 0;
};

// Runs a single criterion; never throws (exceptions become a FAIL detail).
CriterionResult run_criterion(int id, int workers);

// Runs the given criteria (all ten when empty) printing one line each:
//   criterion N: PASS|FAIL - detail [T s]
// Returns the number of failures.
int run_acceptance(std::vector<int> ids, int workers, std::ostream& out);

}  // namespace salemscope
