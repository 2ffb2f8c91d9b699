#include "shimura/report.hpp"

#include <sstream>

#include <json.hpp>

#include "shimura/errors.hpp"

#ifndef SHIMURA_VERSION
#define SHIMURA_VERSION "0.0.0"
#endif

namespace shimura {

using nlohmann::json;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::flagged: return "flagged";
    }
    return "?";
}

CheckStatus check_status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "flagged") return CheckStatus::flagged;
    throw DomainError("unknown check status '" + s + "'");
}

Check make_check(std::string id, std::string expected, std::string actual, std::string citation) {
    const CheckStatus st = expected == actual ? CheckStatus::pass : CheckStatus::fail;
    return {std::move(id), st, std::move(expected), std::move(actual), std::move(citation)};
}

Check condition_check(std::string id, bool ok, std::string expected, std::string actual, std::string citation) {
    return {std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(expected), std::move(actual),
            std::move(citation)};
}

Check flagged_check(std::string id, std::string expected, std::string actual, std::string citation) {
    return {std::move(id), CheckStatus::flagged, std::move(expected), std::move(actual), std::move(citation)};
}

bool SuiteResult::failed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return true;
    return false;
}

bool VerificationReport::failed() const {
    for (const auto& s : suites)
        if (s.failed()) return true;
    return false;
}

std::size_t VerificationReport::count(CheckStatus st) const {
    std::size_t n = 0;
    for (const auto& s : suites)
        for (const auto& c : s.checks) n += c.status == st;
    return n;
}

std::string VerificationReport::to_json() const {
    json j;
    j["version"] = version;
    j["inputs"] = inputs;
    j["suites"] = json::array();
    for (const auto& s : suites) {
        json js{{"name", s.name}, {"checks", json::array()}};
        for (const auto& c : s.checks)
            js["checks"].push_back({{"id", c.id},
                                    {"status", to_string(c.status)},
                                    {"expected", c.expected},
                                    {"actual", c.actual},
                                    {"citation", c.citation}});
        j["suites"].push_back(std::move(js));
    }
    return j.dump(2) + "\n";
}

VerificationReport VerificationReport::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        VerificationReport r;
        r.version = j.at("version").get<std::string>();
        if (j.contains("inputs")) r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
        for (const auto& js : j.at("suites")) {
            SuiteResult s;
            s.name = js.at("name").get<std::string>();
            for (const auto& jc : js.at("checks"))
                s.checks.push_back({jc.at("id").get<std::string>(),
                                    check_status_from_string(jc.at("status").get<std::string>()),
                                    jc.at("expected").get<std::string>(), jc.at("actual").get<std::string>(),
                                    jc.at("citation").get<std::string>()});
            r.suites.push_back(std::move(s));
        }
        return r;
    } catch (const json::exception& e) {
        throw DomainError(std::string("report has the wrong shape: ") + e.what());
    }
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    for (const auto& s : suites) {
        os << "[" << s.name << "]\n";
        for (const auto& c : s.checks) {
            os << "  " << to_string(c.status) << "  " << c.id;
            if (c.status == CheckStatus::pass) os << "  = " << c.actual;
            else os << "\n      expected: " << c.expected << "\n      actual:   " << c.actual;
            os << "\n";
        }
    }
    os << count(CheckStatus::pass) << " passed, " << count(CheckStatus::fail) << " failed, "
       << count(CheckStatus::flagged) << " flagged\n";
    return os.str();
}

const char* tool_version() { return SHIMURA_VERSION; }

} // namespace shimura
