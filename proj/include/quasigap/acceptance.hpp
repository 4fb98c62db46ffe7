#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace quasigap {

struct AcceptanceOptions {
    std::vector<int> only;  // empty = all criteria
};

// Runs the verification suite; prints one [PASS]/[FAIL] line per criterion
// and returns true iff every selected criterion passed.
bool run_acceptance(const AcceptanceOptions& options, std::ostream& os);

}  // namespace quasigap
