#pragma once

#include <optional>
#include <string>

#include "pattern_lab/report.hpp"

namespace pattern_lab::suites {

/// Ranges for the verification suites. Fields left at -1 take the
/// per-suite defaults noted below.
struct SuiteConfig {
    int max_n = -1;   // brute-force enumeration range (default 8)
    int max_k = -1;   // pattern sizes for brute-force suites (default 4)
    int threads = 1;
    int cap = 10;     // enumeration cap

    int brute_max_n() const { return max_n < 0 ? 8 : max_n; }
    int brute_max_k() const { return max_k < 0 ? 4 : max_k; }
    int table_max_n() const { return max_n < 0 ? 12 : max_n; }   // exact identities
    int roots_max_k() const { return max_k < 0 ? 8 : max_k; }    // root layouts
    int conjectures_max_k() const { return max_k < 0 ? 3 : max_k; }
};

/// Closed forms against enumeration oracles: the a_id_closed family, the
/// a_sigma_one formula, and leading coefficients / positivity.
Report suite_closed_forms(const SuiteConfig& cfg);

/// Inner-product decompositions, the E-statistic formulas, character
/// machinery, and exact root layouts.
Report suite_lemmas(const SuiteConfig& cfg);

/// Generating-function identities, coefficientwise.
Report suite_genfun(const SuiteConfig& cfg);

/// The E/E' recurrences and the E' definitional-sum cross-check.
Report suite_recurrences(const SuiteConfig& cfg);

/// Conjecture checks (vanishing at -1, identically-zero constants,
/// real-rootedness windows) and exploratory order-ideal reports.
Report suite_conjectures(const SuiteConfig& cfg);

/// Exact Sturm root layouts of the three closed-form families for
/// k = 2..max_k (also part of suite_lemmas).
Report root_layout_report(int max_k);

/// Dispatch by suite name {closed-forms, lemmas, genfun, recurrences,
/// conjectures, all}; nullopt for an unknown name.
std::optional<Report> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace pattern_lab::suites
