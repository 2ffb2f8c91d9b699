#pragma once

#include <map>
#include <string>
#include <vector>

namespace shimura {

enum class CheckStatus { pass, fail, flagged };
std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct Check {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string expected;
    std::string actual;
    std::string citation;  ///< the claim being checked, in words

    bool operator==(const Check&) const = default;
};

/// pass iff expected == actual.
Check make_check(std::string id, std::string expected, std::string actual, std::string citation);
/// pass iff ok; expected and actual are descriptive.
Check condition_check(std::string id, bool ok, std::string expected, std::string actual, std::string citation);
Check flagged_check(std::string id, std::string expected, std::string actual, std::string citation);

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;

    bool failed() const;
    bool operator==(const SuiteResult&) const = default;
};

struct VerificationReport {
    std::string version;
    std::vector<SuiteResult> suites;
    std::map<std::string, std::string> inputs;  ///< input name -> checksum

    bool failed() const;
    std::size_t count(CheckStatus s) const;
    bool operator==(const VerificationReport&) const = default;

    std::string to_json() const;  ///< pretty-printed, keys sorted
    static VerificationReport from_json(const std::string& text);
    std::string summary() const;  ///< human-readable lines
};

const char* tool_version();

} // namespace shimura
