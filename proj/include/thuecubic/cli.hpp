/*
   Copyright 2026 The thuecubic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef THUECUBIC_CLI_HPP
#define THUECUBIC_CLI_HPP

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubic.hpp"
#include "identities.hpp"
#include "reference_tables.hpp"
#include "reproduction.hpp"
#include "resolvent.hpp"
#include "scan.hpp"
#include "serialize.hpp"
#include "thue.hpp"

namespace thuecubic::cli {

enum ExitCode : int { success = 0, verification_failure = 1, usage_error = 2 };

/// Thrown for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "lo..hi" with either bound possibly negative.
inline IntRange parse_range(const std::string& s) {
    const auto dots = s.find("..", 1);
    if (dots == std::string::npos) throw UsageError("range must look like lo..hi: " + s);
    try {
        std::size_t used = 0;
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        const long lo = std::stol(a, &used);
        if (used != a.size()) throw UsageError("bad range bound: " + a);
        const long hi = std::stol(b, &used);
        if (used != b.size()) throw UsageError("bad range bound: " + b);
        if (lo > hi) throw UsageError("empty range: " + s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("bad range: " + s);
    }
}

inline Int parse_parameter(const std::string& s) {
    try {
        const Int v = parse_int(s);
        if (v == 0) throw UsageError("parameter must be nonzero");
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError("not an integer: " + s);
    }
}

// ---------------------------------------------------------------------------
// Commands. Each writes to `out` and returns an exit code.

inline int cmd_classify(const Int& m, OutputFormat fmt, std::ostream& out) {
    const GaloisClass g = classify(m);
    const Int d = quadratic_subfield(m);
    const std::string quad = d == 1 ? "Q" : "Q(sqrt(" + to_string(d) + "))";
    Json j;
    j["m"] = to_string(m);
    j["group"] = to_string(g.tag);
    j["mu"] = g.mu();
    j["b"] = g.c3_witness ? Json(to_string(*g.c3_witness)) : Json(nullptr);
    j["disc_f"] = to_string(cubic_discriminant(m));
    j["disc_F"] = to_string(form_discriminant(m));
    j["totally_real"] = is_totally_real(m);
    j["quadratic_subfield"] = quad;
    if (g.tag == GaloisGroup::C2) j["splitting_field"] = quad;
    switch (fmt) {
        case OutputFormat::json_lines: out << j.dump() << '\n'; break;
        case OutputFormat::csv:
            out << "m,group,mu,b,disc_f,disc_F,totally_real,quadratic_subfield\n"
                << m << ',' << to_string(g.tag) << ',' << g.mu() << ','
                << (g.c3_witness ? to_string(*g.c3_witness) : "") << ',' << cubic_discriminant(m) << ','
                << form_discriminant(m) << ',' << (is_totally_real(m) ? "true" : "false") << ',' << quad << '\n';
            break;
        case OutputFormat::pretty:
            out << "m                   " << m << '\n'
                << "Galois group        " << to_string(g.tag) << '\n'
                << "mu                  " << g.mu() << '\n';
            if (g.c3_witness) out << "b                   " << *g.c3_witness << '\n';
            out << "disc f_m            " << cubic_discriminant(m) << '\n'
                << "disc F_m(X,1)       " << form_discriminant(m) << '\n'
                << "totally real        " << (is_totally_real(m) ? "yes" : "no") << '\n'
                << "quadratic subfield  " << quad << '\n';
            if (g.tag == GaloisGroup::C2) out << "splitting field     " << quad << '\n';
            break;
    }
    return success;
}

inline int cmd_isom(const Int& m, const Int& n, OutputFormat fmt, std::ostream& out) {
    const IsomReport r = isom_test(m, n);
    std::vector<std::string> roots;
    for (const auto& u : r.roots) roots.push_back(to_string(u));
    Json j;
    j["m"] = to_string(m);
    j["n"] = to_string(n);
    j["same_field"] = r.same_field;
    j["roots"] = roots;
    j["dt"] = to_string(r.dt);
    j["joint_group"] = r.joint_group;
    j["intersection"] = to_string(r.intersection);
    std::string joined_roots;
    for (const auto& s : roots) joined_roots += (joined_roots.empty() ? "" : " ") + s;
    switch (fmt) {
        case OutputFormat::json_lines: out << j.dump() << '\n'; break;
        case OutputFormat::csv:
            out << "m,n,same_field,roots,dt,joint_group,intersection\n"
                << m << ',' << n << ',' << (r.same_field ? "true" : "false") << ',' << joined_roots << ','
                << to_string(r.dt) << ',' << r.joint_group << ',' << to_string(r.intersection) << '\n';
            break;
        case OutputFormat::pretty:
            out << "m, n            " << m << ", " << n << '\n'
                << "same field      " << (r.same_field ? "yes" : "no") << '\n'
                << "rational roots  " << (joined_roots.empty() ? "none" : joined_roots) << '\n'
                << "DT(R_{m,n})     " << to_string(r.dt) << '\n'
                << "joint group     " << r.joint_group << '\n'
                << "intersection    " << to_string(r.intersection) << '\n';
            break;
    }
    return success;
}

inline int cmd_enumerate(const Int& m, long y_bound, unsigned threads, OutputFormat fmt, std::ostream& out) {
    if (y_bound < 1) throw UsageError("y-bound must be positive");
    const auto records = enumerate_overlaps(m, y_bound, threads);
    write_overlaps(out, records, fmt);
    if (fmt == OutputFormat::pretty) {
        out << "integer n with the same splitting field:";
        for (const auto& n : integer_partners(records)) out << ' ' << n;
        out << '\n';
    }
    return success;
}

inline int cmd_self_pairs(const Int& m, OutputFormat fmt, std::ostream& out) {
    const auto sols = self_pair_solutions(m);
    switch (fmt) {
        case OutputFormat::json_lines:
            for (const auto& s : sols) {
                Json j;
                j["m"] = to_string(m);
                j["x"] = to_string(s.x);
                j["y"] = to_string(s.y);
                j["lambda"] = to_string(s.lambda);
                out << j.dump() << '\n';
            }
            break;
        case OutputFormat::csv:
            out << "m,x,y,lambda\n";
            for (const auto& s : sols) out << m << ',' << s.x << ',' << s.y << ',' << s.lambda << '\n';
            break;
        case OutputFormat::pretty:
            out << "m = " << m << " (" << to_string(classify(m).tag) << "), " << sols.size()
                << " solution(s) mapping to n = m\n";
            for (const auto& s : sols) out << "  F_m(" << s.x << "," << s.y << ") = " << s.lambda << '\n';
            break;
    }
    return success;
}

inline int cmd_scan(const ScanConfig& cfg, OutputFormat fmt, std::ostream& out, std::ostream* stats_out) {
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    ScanStats st;
    const auto rows = scan(cfg, &st);
    write_scan_rows(out, rows, fmt);
    if (stats_out)
        *stats_out << "candidates " << st.candidates << ", sieved out " << st.sieved_out << ", resolvent tests "
                   << st.resolvent_tests << ", rows " << rows.size() << '\n';
    return success;
}

/// Runs the certificate suites over a range of m; stops a family at its first failure.
inline int cmd_verify(IntRange range, std::ostream& out) {
    bool ok = true;
    auto report = [&](const std::string& name, std::size_t cases, const std::string& failure) {
        if (failure.empty()) {
            out << "PASS " << name << " (" << cases << " cases)\n";
        } else {
            out << "FAIL " << name << ' ' << failure << '\n';
            ok = false;
        }
    };
    auto per_m = [&](const std::string& name, const std::function<bool(const Int&)>& check) {
        std::size_t cases = 0;
        for (long m = range.lo; m <= range.hi; ++m) {
            if (m == 0) continue;
            ++cases;
            if (!check(Int(m))) return report(name, cases, "at m = " + std::to_string(m));
        }
        report(name, cases, "");
    };
    per_m("resultant_value", resultant_value_check);
    per_m("bezout_identity", bezout_identity_check);
    per_m("tschirnhausen", tschirnhausen_check);
    per_m("self_resolvent_factor", self_resolvent_factor_check);
    {
        // Up to eight partners n per m spread across the range.
        const long width = range.hi - range.lo + 1;
        const long stride = std::max(1L, width / 8);
        std::size_t cases = 0;
        std::string failure;
        for (long m = range.lo; m <= range.hi && failure.empty(); ++m) {
            if (m == 0) continue;
            for (long n = range.lo; n <= range.hi; n += stride) {
                if (n == 0 || n == m) continue;
                ++cases;
                if (!resolvent_discriminant_check(Int(m), Int(n))) {
                    failure = "at (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")";
                    break;
                }
            }
        }
        report("resolvent_discriminant", cases, failure);
    }
    {
        std::string failure;
        const auto pairs = constant_term_pairs();
        const auto& ref = reference_constant_term_pairs();
        if (pairs.size() != ref.size()) failure = "found " + std::to_string(pairs.size()) + " pairs";
        for (std::size_t i = 0; failure.empty() && i < pairs.size(); ++i) {
            if (pairs[i].first != ref[i].first || pairs[i].second != ref[i].second)
                failure = "pair " + std::to_string(i) + " differs";
            const auto r = isom_test(pairs[i].first, pairs[i].second);
            if (!r.same_field || std::find(r.roots.begin(), r.roots.end(), Rat(0)) == r.roots.end())
                failure = "u = 0 not a root at pair " + std::to_string(i);
        }
        report("constant_term_pairs", pairs.size(), failure);
    }
    {
        std::vector<OverlapRecord> all;
        for (long m = -10; m <= 5; ++m) {
            if (m == 0) continue;
            const auto recs = enumerate_overlaps(Int(m));
            all.insert(all.end(), recs.begin(), recs.end());
        }
        const auto found = integer_pairs(all);
        std::vector<std::pair<Int, Int>> want;
        for (const auto& [m, n] : reference_integer_pairs()) want.emplace_back(Int(m), Int(n));
        std::sort(want.begin(), want.end());
        report("integer_pairs_small_m", want.size(),
               found == want ? "" : "found " + std::to_string(found.size()) + " pairs, expected 17");
    }
    return ok ? success : verification_failure;
}

enum class TableChoice { forms, imaginary, real, pairs, all };

inline void print_diff(std::ostream& out, const std::string& name, const TableDiff& d) {
    out << (d.ok() ? "PASS " : "FAIL ") << name << ": " << d.computed << " computed, " << d.expected
        << " published, " << d.exact_rows << " identical in every column\n";
    for (const auto& p : d.problems) out << "  problem: " << p << '\n';
    for (const auto& n : d.notes) out << "  note: " << n << '\n';
}

/// Reproduces the golden tables; `real_limit` bounds |n| in the totally real scan.
inline int cmd_tables(TableChoice which, long real_limit, unsigned threads, std::ostream& out) {
    bool ok = true;
    const bool all = which == TableChoice::all;
    std::vector<OverlapRecord> small;
    if (all || which == TableChoice::forms || which == TableChoice::pairs) {
        for (long m = -10; m <= 5; ++m) {
            if (m == 0) continue;
            const auto recs = enumerate_overlaps(Int(m), default_y_bound, threads);
            small.insert(small.end(), recs.begin(), recs.end());
        }
    }
    if (all || which == TableChoice::forms) {
        const TableDiff d = compare_form_rows(small, reference_form_rows());
        print_diff(out, "solutions for m in [-10, 5]", d);
        ok = ok && d.ok();
    }
    if (all || which == TableChoice::pairs) {
        const auto found = integer_pairs(small);
        std::vector<std::pair<Int, Int>> want;
        for (const auto& [m, n] : reference_integer_pairs()) want.emplace_back(Int(m), Int(n));
        std::sort(want.begin(), want.end());
        const bool same = found == want;
        out << (same ? "PASS " : "FAIL ") << "integer pairs for m in [-10, 5]: " << found.size() << " found, "
            << want.size() << " published\n";
        ok = ok && same;
    }
    auto pair_table = [&](const std::string& name, const ScanConfig& cfg,
                          const std::vector<ReferencePairRow>& golden) {
        TableDiff d;
        const auto expect = golden_pair_rows(
            golden, [&](long m, long n) { return cfg.m_range.contains(m) && cfg.n_range.contains(n); }, d);
        d = compare_pair_rows(scan(cfg), expect, d);
        print_diff(out, name, d);
        ok = ok && d.ok();
    };
    if (all || which == TableChoice::imaginary) {
        ScanConfig cfg = ScanConfig::imaginary();
        cfg.threads = threads;
        pair_table("coincidences with -6 <= m < n <= 200000", cfg, reference_imaginary_pairs());
    }
    if (all || which == TableChoice::real) {
        ScanConfig cfg = ScanConfig::real(real_limit);
        cfg.threads = threads;
        pair_table("coincidences with -" + std::to_string(real_limit) + " <= n < m <= -7", cfg,
                   reference_real_pairs());
    }
    return ok ? success : verification_failure;
}

// ---------------------------------------------------------------------------
// Argument parsing

/// Parses arguments (without the program name) and dispatches. Never throws.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Field isomorphism problem for the cubic family X^3 + mX + m", "thuecubic"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML or INI file with option values; command-line flags win");

    std::string format = "pretty";
    unsigned threads = 1;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, csv or pretty")
            ->check(CLI::IsMember({"json", "jsonl", "json_lines", "csv", "pretty"}));
    };

    std::string m_text, n_text;
    long y_bound = default_y_bound;

    auto* classify_cmd = app.add_subcommand("classify", "Galois group and invariants of f_m");
    classify_cmd->add_option("m", m_text)->required();
    add_format(classify_cmd);

    auto* isom_cmd = app.add_subcommand("isom", "decide whether f_m and f_n share a splitting field");
    isom_cmd->add_option("m", m_text)->required();
    isom_cmd->add_option("n", n_text)->required();
    add_format(isom_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "solutions of F_m(x, y) = lambda and the n they give");
    enum_cmd->add_option("m", m_text)->required();
    enum_cmd->add_option("--y-bound", y_bound, "largest y searched")->capture_default_str();
    enum_cmd->add_option("--threads", threads)->capture_default_str();
    add_format(enum_cmd);

    auto* self_cmd = app.add_subcommand("self-pairs", "solutions mapping f_m to itself");
    self_cmd->add_option("m", m_text)->required();
    add_format(self_cmd);

    std::string m_range_text, n_range_text, side_text, preset = "imaginary";
    long limit = 200000;
    bool show_stats = false;
    auto* scan_cmd = app.add_subcommand("scan", "all coinciding splitting fields over a range");
    scan_cmd->add_option("--preset", preset, "imaginary (-6 <= m < n) or real (n < m <= -7)")
        ->check(CLI::IsMember({"imaginary", "real"}))
        ->capture_default_str();
    scan_cmd->add_option("--limit", limit, "largest |n| for the preset")->capture_default_str();
    scan_cmd->add_option("--m-range", m_range_text, "lo..hi, overrides the preset");
    scan_cmd->add_option("--n-range", n_range_text, "lo..hi, overrides the preset");
    scan_cmd->add_option("--side", side_text, "above, below or any")
        ->check(CLI::IsMember({"above", "below", "any"}));
    scan_cmd->add_option("--threads", threads)->capture_default_str();
    scan_cmd->add_flag("--stats", show_stats, "print candidate counts to stderr");
    add_format(scan_cmd);

    std::string verify_range = "-50..50";
    auto* verify_cmd = app.add_subcommand("verify", "run the exact certificate suites");
    verify_cmd->add_option("--m-range", verify_range)->capture_default_str();

    std::string table = "all";
    long real_limit = 200000;
    auto* tables_cmd = app.add_subcommand("tables", "reproduce the published tables and diff them");
    tables_cmd->add_option("--table", table, "forms, pairs, imaginary, real or all")
        ->check(CLI::IsMember({"forms", "pairs", "imaginary", "real", "all"}))
        ->capture_default_str();
    tables_cmd->add_option("--real-limit", real_limit, "largest |n| in the totally real scan")
        ->capture_default_str();
    tables_cmd->add_option("--threads", threads)->capture_default_str();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        const OutputFormat fmt = parse_output_format(format);
        threads = std::max(1u, threads);
        if (*classify_cmd) return cmd_classify(parse_parameter(m_text), fmt, out);
        if (*isom_cmd) return cmd_isom(parse_parameter(m_text), parse_parameter(n_text), fmt, out);
        if (*enum_cmd) return cmd_enumerate(parse_parameter(m_text), y_bound, threads, fmt, out);
        if (*self_cmd) return cmd_self_pairs(parse_parameter(m_text), fmt, out);
        if (*scan_cmd) {
            if (limit < 7) throw UsageError("limit must be at least 7");
            ScanConfig cfg = preset == "real" ? ScanConfig::real(limit) : ScanConfig::imaginary(limit);
            if (!m_range_text.empty()) cfg.m_range = parse_range(m_range_text);
            if (!n_range_text.empty()) cfg.n_range = parse_range(n_range_text);
            if (side_text == "above") cfg.side = PartnerSide::above;
            if (side_text == "below") cfg.side = PartnerSide::below;
            if (side_text == "any") cfg.side = PartnerSide::any;
            cfg.threads = threads;
            return cmd_scan(cfg, fmt, out, show_stats ? &err : nullptr);
        }
        if (*verify_cmd) return cmd_verify(parse_range(verify_range), out);
        if (*tables_cmd) {
            if (real_limit < 7) throw UsageError("real-limit must be at least 7");
            const TableChoice which = table == "forms"       ? TableChoice::forms
                                      : table == "pairs"     ? TableChoice::pairs
                                      : table == "imaginary" ? TableChoice::imaginary
                                      : table == "real"      ? TableChoice::real
                                                             : TableChoice::all;
            return cmd_tables(which, real_limit, threads, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        // Internal consistency checks throw logic_error.
        err << "error: " << e.what() << '\n';
        return verification_failure;
    }
    return usage_error;
}

}  // namespace thuecubic::cli

#endif  // THUECUBIC_CLI_HPP
