#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgw/characters.hpp"
#include "rgw/errors.hpp"
#include "rgw/hurwitz.hpp"
#include "rgw/partition.hpp"
#include "rgw/signs.hpp"
#include "rgw/suite.hpp"
#include "rgw/table_io.hpp"
#include "rgw/tqft.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rgw;

// Exit codes: 0 success, 1 check failure, 2 usage/input error, 3 budget.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Output {
    std::string path;    // empty: stdout
    bool csv = false;    // mirror the JSON fields as CSV
    bool timing = false;

    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void stamp(ordered_json& report) const {
        if (!timing) return;
        const auto dt = std::chrono::steady_clock::now() - t0;
        report["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

    void emit(const ordered_json& report, const std::vector<std::string>& csv_header,
              const std::vector<std::vector<std::string>>& csv_rows) const {
        std::string text;
        if (csv) {
            for (size_t i = 0; i < csv_header.size(); ++i)
                text += (i ? "," : "") + csv_header[i];
            text += "\n";
            for (const auto& row : csv_rows) {
                for (size_t i = 0; i < row.size(); ++i) {
                    // Quote fields containing separators.
                    const bool needs_quote = row[i].find_first_of(",\"\n") != std::string::npos;
                    if (i) text += ",";
                    if (needs_quote) {
                        std::string quoted = "\"";
                        for (char c : row[i]) {
                            if (c == '"') quoted += "\"\"";
                            else quoted += c;
                        }
                        text += quoted + "\"";
                    } else {
                        text += row[i];
                    }
                }
                text += "\n";
            }
        } else {
            text = report.dump(2) + "\n";
        }
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            f << text;
        }
    }
};

Profile parse_profiles(const std::string& text, int d) {
    return profile_from_json(nlohmann::json::parse(text), d);
}

std::string q_num(const Rational& q) { return q.get_num().get_str(); }
std::string q_den(const Rational& q) { return q.get_den().get_str(); }

int emit_error(const Output& out, const Error& e, int exit_code,
               ordered_json partial = ordered_json()) {
    ordered_json report;
    report["error"] = {{"code", e.code}, {"message", e.what()}};
    if (!partial.is_null()) report["partial"] = std::move(partial);
    out.emit(report, {"code", "message"}, {{e.code, e.what()}});
    return exit_code;
}

int exit_code_for(const Error& e) {
    if (e.code == "enumeration-too-large") return kBudget;
    return kUsage;  // malformed inputs, wrong targets, size mismatches
}

// ---------------------------------------------------------------- hurwitz

int run_hurwitz(int d, int genus, const std::string& profiles_text, bool ordered,
                const std::string& method, std::uint64_t budget, int threads,
                const std::string& cache_dir, const Output& out) {
    const Profile profile = parse_profiles(profiles_text, d);
    CoverCountQuery query(d, genus, profile, ordered);

    ordered_json jquery;
    jquery["d"] = d;
    jquery["genus"] = genus;
    jquery["profiles"] = profile_to_json(profile);
    jquery["ordered"] = ordered;

    Rational value;
    std::string used = method;
    ordered_json partial;
    try {
        if (method == "enum") {
            value = count_by_enumeration(query, budget, threads);
        } else if (method == "char") {
            CharacterTable table(cache_dir);
            value = count_by_characters(query, table);
        } else {  // both
            CharacterTable table(cache_dir);
            const Rational by_char = count_by_characters(query, table);
            Rational by_enum;
            try {
                by_enum = count_by_enumeration(query, budget, threads);
            } catch (const EnumerationTooLarge& e) {
                partial["query"] = jquery;
                partial["chi_forced"] = chi_forced(query);
                partial["value"] = rational_to_json(by_char);
                partial["method"] = "char";
                return emit_error(out, e, kBudget, std::move(partial));
            }
            if (by_enum != by_char) {
                ordered_json report;
                report["query"] = jquery;
                report["chi_forced"] = chi_forced(query);
                report["error"] = {{"code", "oracle-mismatch"},
                                   {"message", "enumeration " + by_enum.get_str() +
                                                   " != characters " + by_char.get_str()}};
                out.emit(report, {"code", "message"},
                         {{"oracle-mismatch", "enumeration vs characters"}});
                return kCheckFailed;
            }
            value = by_char;
        }
    } catch (const EnumerationTooLarge& e) {
        return emit_error(out, e, kBudget);
    }

    ordered_json report;
    report["query"] = jquery;
    report["chi_forced"] = chi_forced(query);
    report["value"] = rational_to_json(value);
    report["method"] = used;
    out.stamp(report);
    out.emit(report,
             {"d", "genus", "profiles", "ordered", "chi_forced", "method", "num", "den"},
             {{std::to_string(d), std::to_string(genus), profile.to_string(),
               ordered ? "true" : "false", std::to_string(chi_forced(query)), used,
               q_num(value), q_den(value)}});
    return kOk;
}

// ------------------------------------------------------------ split-check

ordered_json split_check_one(int d, int half_genus, const std::string& profiles_text,
                             CharacterTable& table, bool& match,
                             std::vector<std::string>& csv_row) {
    const Profile base = parse_profiles(profiles_text, d);

    const CoverCountQuery smoothing_query(d, half_genus, base);
    const int chi_real = 2 * chi_forced(smoothing_query);
    const Rational lhs = doublet_real_count(smoothing_query, table);

    const TargetCurve smoothing = TargetCurve::doublet(half_genus, base.count());
    const TargetCurve normalization = smoothing.degenerate().normalization();
    InvariantTable norm_table(normalization);

    ordered_json terms = ordered_json::array();
    for (const Partition& lambda : partitions_of(d)) {
        const Profile extended = base.with_appended(lambda, lambda);
        const Rational v =
            doublet_real_count(CoverCountQuery(d, half_genus - 1, extended), table);
        norm_table.set(d, chi_real + 4 * lambda.length(), extended, v);
        ordered_json term;
        term["lambda"] = partition_to_json(lambda);
        term["zeta"] = ordered_json(zeta(lambda).get_str());
        term["value"] = rational_to_json(v);
        terms.push_back(std::move(term));
    }
    const Rational rhs = split_invariant(norm_table, d, chi_real, base);
    match = lhs == rhs;

    ordered_json check;
    check["d"] = d;
    check["half_genus"] = half_genus;
    check["profiles"] = profile_to_json(base);
    check["chi"] = chi_real;
    check["smoothing"] = rational_to_json(lhs);
    check["terms"] = std::move(terms);
    check["split_sum"] = rational_to_json(rhs);
    check["match"] = match;
    csv_row = {std::to_string(d), std::to_string(half_genus), base.to_string(),
               std::to_string(chi_real), q_num(lhs), q_den(lhs), q_num(rhs), q_den(rhs),
               match ? "true" : "false"};
    return check;
}

int run_split_check(const std::vector<int>& degrees, int half_genus,
                    const std::string& profiles_text, const std::string& cache_dir,
                    const Output& out) {
    CharacterTable table(cache_dir);
    ordered_json checks = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    bool all_match = true;
    for (int d : degrees) {
        bool match = false;
        std::vector<std::string> row;
        checks.push_back(split_check_one(d, half_genus, profiles_text, table, match, row));
        rows.push_back(std::move(row));
        all_match = all_match && match;
    }
    ordered_json report;
    report["checks"] = std::move(checks);
    report["all_match"] = all_match;
    out.stamp(report);
    out.emit(report,
             {"d", "half_genus", "profiles", "chi", "smoothing_num", "smoothing_den",
              "split_num", "split_den", "match"},
             rows);
    return all_match ? kOk : kCheckFailed;
}

// ----------------------------------------------------------------- series

int run_series(const std::string& table_path, int d, const Output& out) {
    const InvariantTable table = load_table(table_path);

    std::vector<int> degrees;
    if (d > 0) {
        degrees.push_back(d);
    } else {
        for (const auto& [key, value] : table.entries()) {
            const int dd = std::get<0>(key);
            if (degrees.empty() || degrees.back() != dd) degrees.push_back(dd);
        }
    }

    ordered_json report;
    report["target"] = target_to_json(table.target());
    ordered_json all = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (int dd : degrees) {
        const BiSeries s = series_assemble(table, dd);
        ordered_json terms = ordered_json::array();
        for (const auto& [key, c] : s.coeffs()) {
            ordered_json term;
            term["t2"] = key.first;  // doubled exponent of t
            term["u"] = key.second;
            term["num"] = ordered_json(c.get_num().get_str());
            term["den"] = ordered_json(c.get_den().get_str());
            terms.push_back(std::move(term));
            rows.push_back({std::to_string(dd), std::to_string(key.first),
                            std::to_string(key.second), c.get_num().get_str(),
                            c.get_den().get_str()});
        }
        ordered_json one;
        one["d"] = dd;
        one["terms"] = std::move(terms);
        all.push_back(std::move(one));
    }
    report["series"] = std::move(all);
    out.stamp(report);
    out.emit(report, {"d", "t2", "u", "num", "den"}, rows);
    return kOk;
}

// ------------------------------------------------------------------ chain

int run_chain(int d, const Output& out) {
    ordered_json report;
    report["d"] = d;
    ordered_json rows_json = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (const Partition& lambda : partitions_of(d)) {
        const VfcChain chain = vfc_coefficient_chain(lambda);
        ordered_json row;
        row["lambda"] = partition_to_json(lambda);
        row["c_split"] = rational_to_json(chain.c_split);
        row["deg_phi"] = ordered_json(chain.deg_phi.get_str());
        row["deg_q0"] = ordered_json(chain.deg_q0.get_str());
        rows_json.push_back(std::move(row));
        rows.push_back({lambda.to_string(), q_num(chain.c_split), q_den(chain.c_split),
                        chain.deg_phi.get_str(), chain.deg_q0.get_str()});
    }
    report["rows"] = std::move(rows_json);
    out.stamp(report);
    out.emit(report, {"lambda", "c_split_num", "c_split_den", "deg_phi", "deg_q0"}, rows);
    return kOk;
}

// ------------------------------------------------------------------ signs

int run_signs(int ell, const std::string& which, const Output& out) {
    auto catalog = register_paper_isos();
    std::vector<NamedIso> chain;
    if (which == "main") {
        chain = main_chain();
    } else {
        chain = {catalog.at("iso-square-bundle"), catalog.at("iso-canonical-triv"),
                 catalog.at("iso-twist")};
    }
    const ComposeResult result = compose(chain, ell);

    ordered_json report;
    report["ell"] = ell;
    report["chain"] = which;
    report["start"] = result.start.to_string();
    ordered_json steps = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    int running = 1;
    for (const ComposeStep& step : result.steps) {
        running *= step.sign;
        ordered_json s;
        s["name"] = step.name;
        s["sign"] = step.sign;
        s["reversed"] = step.reversed;
        s["running"] = running;
        steps.push_back(std::move(s));
        rows.push_back({step.name, std::to_string(step.sign),
                        step.reversed ? "true" : "false", std::to_string(running)});
    }
    report["steps"] = std::move(steps);
    report["end"] = result.end.to_string();
    report["final"] = result.sign;
    out.stamp(report);
    out.emit(report, {"name", "sign", "reversed", "running"}, rows);
    return kOk;
}

// ------------------------------------------------------------------ suite

int run_suite(bool fail_fast, const std::string& cache_dir, const Output& out) {
    const auto results = run_acceptance_suite(fail_fast, cache_dir);
    bool all_passed = true;
    ordered_json rows_json = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (const CriterionResult& r : results) {
        all_passed = all_passed && r.passed;
        ordered_json row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["passed"] = r.passed;
        row["detail"] = r.detail;
        rows_json.push_back(std::move(row));
        rows.push_back({std::to_string(r.id), r.name, r.passed ? "true" : "false", r.detail});
    }
    ordered_json report;
    report["criteria"] = std::move(rows_json);
    report["all_passed"] = all_passed;
    out.stamp(report);
    out.emit(report, {"id", "name", "passed", "detail"}, rows);
    return all_passed ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of the splitting rule for local-curve invariants:"
                 " branched-cover oracles, degeneration formulas, and the sign ledger"};
    app.require_subcommand(1);

    Output out;
    std::string cache_dir;
    if (const char* env = std::getenv("RGW_CACHE_DIR")) cache_dir = env;
    app.add_option("--output", out.path, "write the report to this file instead of stdout");
    app.add_flag("--csv", out.csv, "emit CSV (fixed header order) instead of JSON");
    app.add_flag("--timing", out.timing, "include elapsed_ms in JSON reports");
    app.add_option("--cache-dir", cache_dir,
                   "character-table cache directory (env RGW_CACHE_DIR)");

    // hurwitz
    auto* hurwitz = app.add_subcommand("hurwitz", "count branched covers two ways");
    int h_d = 1, h_genus = 0, h_threads = 0;
    std::uint64_t h_budget = kDefaultBudget;
    std::string h_profiles = "[]";
    std::string h_method = "both";
    bool h_ordered = false;
    hurwitz->add_option("--d", h_d, "degree of the cover")->required();
    hurwitz->add_option("--genus", h_genus, "genus of the target")->required();
    hurwitz->add_option("--profiles", h_profiles, "ramification profiles, e.g. [[2],[2]]");
    hurwitz->add_flag("--ordered", h_ordered, "count with ordered contact points");
    hurwitz->add_option("--method", h_method, "enum | char | both")
        ->check(CLI::IsMember({"enum", "char", "both"}));
    hurwitz->add_option("--budget", h_budget, "enumeration work budget")
        ->check(CLI::PositiveNumber);
    hurwitz->add_option("--threads", h_threads, "enumeration threads (0 = hardware)");

    // split-check
    auto* split = app.add_subcommand("split-check", "verify the splitting identity");
    int s_d = 0, s_half_genus = 1, s_max_d = 4;
    std::string s_profiles = "[]";
    split->add_option("--d", s_d, "degree (0 = run all degrees up to --max-d)");
    split->add_option("--half-genus", s_half_genus, "half genus of the smoothing")
        ->check(CLI::PositiveNumber);
    split->add_option("--profiles", s_profiles, "base ramification profiles");
    split->add_option("--max-d", s_max_d, "largest degree when --d is not given")
        ->check(CLI::PositiveNumber);

    // series
    auto* series = app.add_subcommand("series", "assemble the generating series of a table");
    std::string series_table;
    int series_d = 0;
    series->add_option("--table", series_table, "JSON table file")->required();
    series->add_option("--d", series_d, "restrict to one degree");

    // chain
    auto* chain = app.add_subcommand("chain", "coefficient chain per partition");
    int c_d = 1;
    chain->add_option("--d", c_d, "degree")->required()->check(CLI::PositiveNumber);

    // signs
    auto* signs = app.add_subcommand("signs", "compose a ledger chain");
    int g_ell = 0;
    std::string g_chain = "main";
    signs->add_option("--ell", g_ell, "number of conjugate node pairs")->required();
    signs->add_option("--chain", g_chain, "main | comsign")
        ->check(CLI::IsMember({"main", "comsign"}));

    // suite
    auto* suite = app.add_subcommand("suite", "run the acceptance battery");
    bool fail_fast = true;
    suite->add_flag("--fail-fast,!--no-fail-fast", fail_fast,
                    "stop at the first failing criterion (default)");

    for (CLI::App* sub : {hurwitz, split, series, chain, signs, suite}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (hurwitz->parsed())
            return run_hurwitz(h_d, h_genus, h_profiles, h_ordered, h_method, h_budget,
                               h_threads, cache_dir, out);
        if (split->parsed()) {
            std::vector<int> degrees;
            if (s_d > 0) {
                degrees.push_back(s_d);
            } else {
                for (int d = 1; d <= s_max_d; ++d) degrees.push_back(d);
            }
            return run_split_check(degrees, s_half_genus, s_profiles, cache_dir, out);
        }
        if (series->parsed()) return run_series(series_table, series_d, out);
        if (chain->parsed()) return run_chain(c_d, out);
        if (signs->parsed()) return run_signs(g_ell, g_chain, out);
        if (suite->parsed()) return run_suite(fail_fast, cache_dir, out);
    } catch (const Error& e) {
        return emit_error(out, e, exit_code_for(e));
    } catch (const nlohmann::json::exception& e) {
        ordered_json report;
        report["error"] = {{"code", "invalid-json"}, {"message", e.what()}};
        out.emit(report, {"code", "message"}, {{"invalid-json", e.what()}});
        return kUsage;
    }
    return kUsage;
}
