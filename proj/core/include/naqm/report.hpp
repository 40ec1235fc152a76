#pragma once

// Structured pass/fail result for an identity suite. Failures carry the
// offending case together with the expected and actual values; witnesses
// carry positive findings of existential suites (and, for the full-table
// alternativity scan, empirical observations that do not gate `passed`).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace naqm::verification {

struct CaseOutcome {
    std::string case_descriptor;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;                    ///< canonical kebab-case suite name
    std::size_t total_cases = 0;
    std::vector<CaseOutcome> failures;    ///< empty iff passed
    std::vector<CaseOutcome> witnesses;   ///< positive findings / observations
    bool passed = false;

    [[nodiscard]] std::size_t failed_count() const { return failures.size(); }
};

/// Line-oriented human-readable rendering, deterministic for fixed inputs.
std::string to_text(const VerificationReport& report);

/// JSON array of records {suite, total, failed, passed, failures, witnesses}.
std::string to_json_string(std::span<const VerificationReport> reports);

}  // namespace naqm::verification
