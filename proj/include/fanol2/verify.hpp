#pragma once

// Verification suites. Each suite is a list of named checks with measured and
// expected values; a suite fails iff one of its checks fails.

#include <cstdint>
#include <string>
#include <vector>

namespace fanol2 {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct Check {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string measured;
    std::string expected;
    /// "exact" or a decimal tolerance.
    std::string tolerance = "exact";
    /// Skipped checks carry the reason here.
    std::string note;
};

struct VerifyConfig {
    std::uint64_t seed = 1;
    unsigned workers = 0;
    /// Seconds; 0 means unlimited. Stretch checks run only while budget remains.
    double budget_seconds = 0;
};

enum class Suite { Identities, Lemma51, Roots, Constructions, Oracles, All };

const char* to_string(Suite s);
Suite suite_from_string(const std::string& name);

struct VerifyReport {
    std::string suite;
    VerifyConfig config;
    std::vector<Check> checks;
    double elapsed_seconds = 0;

    std::size_t count(CheckStatus s) const;
    bool ok() const { return count(CheckStatus::Fail) == 0; }
};

/// `All` runs roots, identities, constructions, oracles and lemma51 in that
/// order; once the budget is spent the remaining suites are skipped.
VerifyReport run_verify(Suite suite, const VerifyConfig& config);

std::string format_verify_text(const VerifyReport& r);
std::string to_json(const VerifyReport& r, int indent = 2);

} // namespace fanol2
