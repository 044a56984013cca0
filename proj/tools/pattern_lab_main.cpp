#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pattern_lab/closed_forms.hpp"
#include "pattern_lab/interpolate.hpp"
#include "pattern_lab/moments.hpp"
#include "pattern_lab/roots.hpp"
#include "pattern_lab/suites.hpp"

using json = nlohmann::ordered_json;
using namespace pattern_lab;
using perm_core::Permutation;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

Permutation parse_pattern(const std::string& s) {
    std::vector<int> word;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) word.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw domain_error("bad pattern '" + s + "'");
            word.push_back(c - '0');
        }
    }
    return Permutation(std::move(word));
}

Partition parse_lambda(const std::string& s) {
    if (s.empty() || s == "0") return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::string csv_cell(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct Output {
    std::string format = "text";
    std::string command;
    json config = json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;  // also drives the text view
    json rows = json::array();
    std::optional<bool> all_passed;

    void row(std::vector<std::string> cells, json j) {
        csv_rows.push_back(std::move(cells));
        rows.push_back(std::move(j));
    }

    void print() const {
        if (format == "json") {
            json top;
            top["command"] = command;
            top["config"] = config;
            top["rows"] = rows;
            top["all_passed"] = all_passed.value_or(true);
            std::cout << top.dump(2) << "\n";
            return;
        }
        if (format == "csv") {
            std::string line;
            for (std::size_t i = 0; i < csv_header.size(); ++i)
                line += (i ? "," : "") + csv_cell(csv_header[i]);
            std::cout << line << "\n";
            for (const auto& r : csv_rows) {
                line.clear();
                for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "," : "") + csv_cell(r[i]);
                std::cout << line << "\n";
            }
            return;
        }
        for (const auto& r : csv_rows) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) line += "  ";
                line += csv_header[i] + "=" + r[i];
            }
            std::cout << line << "\n";
        }
    }
};

std::string rat_json(const Rational& r) { return r.to_string(); }
std::string rat_cell(const Rational& r, const std::string& format) {
    return format == "text" ? r.to_short_string() : r.to_string();
}

json pattern_list_json(const std::vector<Permutation>& patterns) {
    json a = json::array();
    for (const auto& p : patterns) a.push_back(p.to_string());
    return a;
}

json polynomial_record(const poly_lab::RationalPolynomial& p, const Rational& root_bound) {
    json rec;
    rec["degree"] = p.degree();
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(rat_json(c));
    rec["coefficients"] = coeffs;
    rec["leading_coefficient"] = p.is_zero() ? "0/1" : rat_json(p.leading_coefficient());
    if (!p.is_zero()) {
        const auto roots = poly_lab::analyze_roots(p, root_bound);
        rec["is_real_rooted"] = roots.is_real_rooted;
        json exact = json::array();
        for (const auto& r : roots.exact_rational_roots) exact.push_back(rat_json(r));
        rec["exact_rational_roots"] = exact;
        json intervals = json::array();
        for (const auto& [lo, hi] : roots.isolating_intervals)
            intervals.push_back(json::array({rat_json(lo), rat_json(hi)}));
        rec["isolating_intervals"] = intervals;
        rec["distinct_real_roots"] = roots.distinct_real_roots;
    }
    return rec;
}

std::string poly_cells(const poly_lab::RationalPolynomial& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        s += (i ? " " : "") + p.coefficients()[i].to_string();
    return s + "]";
}

int cmd_moments(const std::vector<Permutation>& patterns, int n, Output& out,
                const moments::EnumerationOptions& opts) {
    const auto table = moments::moment_class_function(patterns, n, opts);
    out.csv_header = {"cycle_type", "class_size", "value"};
    for (const auto& [ct, value] : table.values) {
        json j;
        j["cycle_type"] = ct.parts();
        j["class_size"] = perm_core::class_size(ct).str();
        j["value"] = rat_json(value);
        out.row({ct.to_string(), perm_core::class_size(ct).str(), rat_cell(value, out.format)},
                std::move(j));
    }
    return kExitOk;
}

int cmd_alpha(const std::vector<Permutation>& patterns, const Partition& lambda, int n_lo,
              int n_hi, Output& out, const moments::EnumerationOptions& opts) {
    out.csv_header = {"n", "alpha"};
    for (int n = n_lo; n <= n_hi; ++n) {
        json j;
        j["n"] = n;
        if (n - lambda.sum() < lambda.first_part()) {
            j["alpha"] = "undefined";
            out.row({std::to_string(n), "undefined"}, std::move(j));
            continue;
        }
        const Rational a = moments::coefficient_alpha(patterns, lambda, n, opts);
        j["alpha"] = rat_json(a);
        out.row({std::to_string(n), rat_cell(a, out.format)}, std::move(j));
    }
    return kExitOk;
}

int cmd_interpolate(const std::vector<Permutation>& patterns, const Partition& lambda,
                    Output& out, const moments::EnumerationOptions& opts) {
    const auto p = poly_lab::interpolate_a(patterns, lambda, opts);
    const auto [n0, degree] = poly_lab::interpolation_window(patterns, lambda);
    out.config["nodes"] = std::to_string(n0) + ".." + std::to_string(n0 + degree);
    out.config["verified_at"] = n0 + degree + 1;
    out.csv_header = {"degree", "coefficients", "leading_coefficient"};
    json rec = polynomial_record(p, Rational(1000000));
    out.row({std::to_string(p.degree()), poly_cells(p),
             p.is_zero() ? "0" : rat_cell(p.leading_coefficient(), out.format)},
            std::move(rec));
    return kExitOk;
}

int cmd_closed_form(const std::optional<Partition>& lambda, int k,
                    const std::vector<Permutation>& patterns, int n_lo, int n_hi, Output& out) {
    if (lambda.has_value()) {
        const auto p = closed_forms::a_id_closed(*lambda, k);
        out.csv_header = {"degree", "coefficients", "leading_coefficient"};
        out.row({std::to_string(p.degree()), poly_cells(p),
                 p.is_zero() ? "0" : rat_cell(p.leading_coefficient(), out.format)},
                polynomial_record(p, Rational(k)));
        return kExitOk;
    }
    const Permutation& sigma = patterns.front();
    out.csv_header = {"kind", "n", "value", "positive", "margin"};
    const Rational lead = closed_forms::a_sigma_one_leading(sigma);
    const auto pos = closed_forms::positivity_test(sigma);
    json j;
    j["kind"] = "leading";
    j["value"] = rat_json(lead);
    j["positive"] = pos.positive;
    j["margin"] = pos.margin.str();
    out.row({"leading", "", rat_cell(lead, out.format), pos.positive ? "true" : "false",
             pos.margin.str()},
            std::move(j));
    for (int n = n_lo; n <= n_hi; ++n) {
        const Rational v = closed_forms::a_sigma_one(sigma, n);
        json r;
        r["kind"] = "value";
        r["n"] = n;
        r["value"] = rat_json(v);
        out.row({"value", std::to_string(n), rat_cell(v, out.format), "", ""}, std::move(r));
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, Output& out, const suites::SuiteConfig& cfg) {
    const auto report = suites::run_suite(suite, cfg);
    if (!report.has_value()) throw domain_error("unknown suite '" + suite + "'");
    out.csv_header = {"status", "check", "detail"};
    for (const auto& c : report->checks) {
        json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["informational"] = c.informational;
        j["detail"] = c.detail;
        out.row({c.informational ? "report" : (c.passed ? "pass" : "FAIL"), c.name, c.detail},
                std::move(j));
    }
    out.all_passed = report->all_passed();
    return report->all_passed() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moments of permutation-pattern counts on conjugacy classes"};
    app.require_subcommand(1);

    std::vector<std::string> pattern_args;
    std::string lambda_arg, n_arg = "", suite_arg, format = "text";
    int k_arg = 0, threads = 1;
    int max_n = -1, max_k = -1;
    int cap = perm_core::kDefaultEnumerationCap;
    if (const char* env = std::getenv("PATTERN_LAB_CAP")) cap = std::atoi(env);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--threads", threads)->check(CLI::PositiveNumber);
        sub->add_option("--cap", cap);
    };
    CLI::App* c_moments = app.add_subcommand("moments", "moment class function table");
    c_moments->add_option("--pattern", pattern_args)->required();
    c_moments->add_option("--n", n_arg)->required();
    add_common(c_moments);
    CLI::App* c_alpha = app.add_subcommand("alpha", "character coefficients of a moment");
    c_alpha->add_option("--pattern", pattern_args)->required();
    c_alpha->add_option("--lambda", lambda_arg)->required();
    c_alpha->add_option("--n", n_arg)->required();
    add_common(c_alpha);
    CLI::App* c_interp = app.add_subcommand("interpolate", "interpolate the coefficient polynomial");
    c_interp->add_option("--pattern", pattern_args)->required();
    c_interp->add_option("--lambda", lambda_arg)->required();
    add_common(c_interp);
    CLI::App* c_closed = app.add_subcommand("closed-form", "closed-form polynomials and values");
    c_closed->add_option("--lambda", lambda_arg);
    c_closed->add_option("--k", k_arg);
    c_closed->add_option("--pattern", pattern_args);
    c_closed->add_option("--n", n_arg);
    add_common(c_closed);
    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite_arg)->required();
    c_verify->add_option("--max-n", max_n);
    c_verify->add_option("--max-k", max_k);
    add_common(c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Output out;
    out.format = format;
    try {
        std::vector<Permutation> patterns;
        for (const auto& s : pattern_args) patterns.push_back(parse_pattern(s));
        const moments::EnumerationOptions opts{cap, threads};

        if (app.got_subcommand(c_moments)) {
            out.command = "moments";
            const auto [lo, hi] = parse_range(n_arg);
            if (lo != hi) throw domain_error("moments takes a single --n");
            out.config["patterns"] = pattern_list_json(patterns);
            out.config["n"] = lo;
            out.config["cap"] = cap;
            const int code = cmd_moments(patterns, lo, out, opts);
            out.print();
            return code;
        }
        if (app.got_subcommand(c_alpha)) {
            out.command = "alpha";
            const Partition lambda = parse_lambda(lambda_arg);
            const auto [lo, hi] = parse_range(n_arg);
            out.config["patterns"] = pattern_list_json(patterns);
            out.config["lambda"] = lambda.parts();
            out.config["n"] = n_arg;
            out.config["cap"] = cap;
            const int code = cmd_alpha(patterns, lambda, lo, hi, out, opts);
            out.print();
            return code;
        }
        if (app.got_subcommand(c_interp)) {
            out.command = "interpolate";
            const Partition lambda = parse_lambda(lambda_arg);
            out.config["patterns"] = pattern_list_json(patterns);
            out.config["lambda"] = lambda.parts();
            out.config["cap"] = cap;
            const int code = cmd_interpolate(patterns, lambda, out, opts);
            out.print();
            return code;
        }
        if (app.got_subcommand(c_closed)) {
            out.command = "closed-form";
            std::optional<Partition> lambda;
            if (c_closed->count("--lambda")) lambda = parse_lambda(lambda_arg);
            if (lambda.has_value() && k_arg < 1)
                throw domain_error("closed-form with --lambda needs --k");
            if (!lambda.has_value() && patterns.empty())
                throw domain_error("closed-form needs --lambda/--k or --pattern");
            int lo = 0, hi = -1;
            if (!n_arg.empty()) std::tie(lo, hi) = parse_range(n_arg);
            if (lambda.has_value()) {
                out.config["lambda"] = lambda->parts();
                out.config["k"] = k_arg;
            } else {
                out.config["patterns"] = pattern_list_json(patterns);
                if (!n_arg.empty()) out.config["n"] = n_arg;
            }
            const int code = cmd_closed_form(lambda, k_arg, patterns, lo, hi, out);
            out.print();
            return code;
        }
        if (app.got_subcommand(c_verify)) {
            out.command = "verify";
            suites::SuiteConfig cfg;
            cfg.max_n = max_n;
            cfg.max_k = max_k;
            cfg.threads = threads;
            cfg.cap = cap;
            out.config["suite"] = suite_arg;
            out.config["max_n"] = max_n;
            out.config["max_k"] = max_k;
            out.config["cap"] = cap;
            const int code = cmd_verify(suite_arg, out, cfg);
            out.print();
            return code;
        }
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}
