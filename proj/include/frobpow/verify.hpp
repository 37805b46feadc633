// verify.hpp
// Self-contained property suites behind the `verify` CLI command: oracle
// equivalence for membership, Sylvester identities, the frequency-matched
// counting integral against direct sums, arc-geometry certification, and
// closed-form checks for h. Each check reports pass/fail plus a witness
// for the first failing instance.
//
// The membership oracle here is an independent dynamic-programming
// reachability marking, deliberately written apart from the residue test
// it cross-examines.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobpow {

struct VerifyOptions {
    bool full = false;        // full = module-property bounds; quick = small bounds
    uint64_t seed = 0;
    // test-of-tests hook: inverts the residue membership test inside the
    // oracle-equivalence check so the harness must catch it
    bool mutate_residue = false;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string witness;   // empty on pass
    double seconds;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

// reachability oracle: marks[n] = 1 iff n = c x + d y for some x, y >= 0
std::vector<uint8_t> dp_mark_members(int64_t c, int64_t d, int64_t limit);

} // namespace frobpow
