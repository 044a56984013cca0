#pragma once

#include <string>
#include <vector>

namespace pattern_lab {

/// One verification line: an assertion that passed or failed, or a purely
/// informational entry (kind "report") that never affects the outcome.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    bool informational = false;

    static CheckResult pass(std::string name, std::string detail = "") {
        return {std::move(name), true, std::move(detail), false};
    }
    static CheckResult fail(std::string name, std::string detail = "") {
        return {std::move(name), false, std::move(detail), false};
    }
    static CheckResult info(std::string name, std::string detail = "") {
        return {std::move(name), true, std::move(detail), true};
    }
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back(ok ? CheckResult::pass(name, detail) : CheckResult::fail(name, detail));
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    /// Stable plain-text rendering, one line per check.
    std::string to_text() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.informational ? "report" : (c.passed ? "pass" : "FAIL");
            out += "  " + c.name;
            if (!c.detail.empty()) out += "  [" + c.detail + "]";
            out += "\n";
        }
        return out;
    }
};

}  // namespace pattern_lab
