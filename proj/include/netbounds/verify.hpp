#pragma once

// The verification suite behind `netbounds verify` and the acceptance test
// binary: reproduces the reference table and the closed forms, and re-runs
// the exhaustive property checks at their stated sizes.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace netbounds {

enum class VerifyLevel { Fast, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> issues;
    std::int64_t elapsed_ms = 0;
};

struct ReferenceEntry {
    int d;
    int k;
    std::int64_t bound;
};

/// The 77 published lower bounds for 4 <= d <= 14, 1 <= k <= d-2.
const std::vector<ReferenceEntry>& reference_table();

/// Reference bound for one (d, k); throws std::out_of_range outside the
/// table.
std::int64_t reference_bound(int d, int k);

/// Runs every criterion (Fast restricts the table reproduction to d <= 8 and
/// the k = 1 sweep to d <= 10). Progress lines go to `log` when given.
std::vector<CriterionResult> run_verification(VerifyLevel level, int jobs = 0,
                                              std::ostream* log = nullptr);

}  // namespace netbounds
