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

#ifndef THUECUBIC_REPRODUCTION_HPP
#define THUECUBIC_REPRODUCTION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "reference_tables.hpp"
#include "scan.hpp"
#include "thue.hpp"

// Diffs between computed rows and the published golden tables.

namespace thuecubic {

struct TableDiff {
    std::size_t expected = 0;
    std::size_t computed = 0;
    std::size_t exact_rows = 0;       // identical in every column
    std::vector<std::string> problems;
    std::vector<std::string> notes;   // tolerated, explained differences

    bool ok() const { return problems.empty() && expected == computed; }
};

namespace detail {

template <class T>
std::string joined(const T& t) {
    std::ostringstream os;
    os << '(';
    std::apply([&](const auto&... v) {
        std::size_t i = 0;
        ((os << (i++ ? "," : "") << v), ...);
    }, t);
    os << ')';
    return os.str();
}

/// Reports elements present in only one of two multisets.
template <class T>
void multiset_diff(std::vector<T> a, std::vector<T> b, const std::string& what, TableDiff& d) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<T> only_a, only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    for (const auto& v : only_a) d.problems.push_back(what + ": published only " + joined(v));
    for (const auto& v : only_b) d.problems.push_back(what + ": computed only " + joined(v));
}

}  // namespace detail

/**
 * Compares enumerate output against the published rows for every m present in
 * `records`. Blocks are compared after sorting both sides by (lambda, x, y).
 */
inline TableDiff compare_form_rows(const std::vector<OverlapRecord>& records,
                                   const std::vector<ReferenceFormRow>& golden) {
    using Key = std::tuple<Int, Int, Int, Int, std::string, bool>;  // m, lambda, x, y, n, excluded
    std::vector<Key> want, got;
    std::map<Int, bool> present;
    for (const auto& r : records) present[r.m] = true;
    for (const auto& g : golden) {
        if (!present.count(Int(g.m))) continue;
        const Rat n = parse_rat(g.n);
        want.emplace_back(Int(g.m), evaluate_factor_expression(g.lambda), Int(g.x), Int(g.y), to_string(n),
                          g.excluded);
    }
    for (const auto& r : records)
        got.emplace_back(r.m, r.solution.lambda, r.solution.x, r.solution.y, to_string(r.n),
                         r.excluded.has_value());
    TableDiff d;
    d.expected = want.size();
    d.computed = got.size();
    detail::multiset_diff(want, got, "row", d);
    std::vector<Key> a = want, b = got;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Key> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    d.exact_rows = common.size();
    return d;
}

/// Every published pair row with `keep(m, n)`, errata applied after checking them.
inline std::vector<ScanRow> golden_pair_rows(const std::vector<ReferencePairRow>& golden,
                                             const std::function<bool(long, long)>& keep, TableDiff& d) {
    std::vector<ScanRow> out;
    for (const auto& g : golden) {
        if (!keep(g.m, g.n)) continue;
        ScanRow r{Int(g.m), Int(g.n),
                  {Int(g.x), Int(g.y), evaluate_factor_expression(g.lambda)},
                  {Int(g.xr), Int(g.yr), evaluate_factor_expression(g.lambda_r)}};
        for (const auto& e : reference_sign_errata()) {
            if (e.m != g.m || e.n != g.n || e.xr != g.xr || e.yr != g.yr) continue;
            const Int published = evaluate_factor_expression(e.published);
            const Int evaluated = evaluate_factor_expression(e.evaluated);
            const Int actual = form_value(r.n, r.backward.x, r.backward.y);
            if (published != r.backward.lambda || published == actual || evaluated != actual) {
                d.problems.push_back("erratum not confirmed at " +
                                     detail::joined(std::tuple(g.m, g.n, g.xr, g.yr)));
                continue;
            }
            d.notes.push_back("published lambda' " + std::string(e.published) + " at " +
                              detail::joined(std::tuple(g.m, g.n, g.xr, g.yr)) + " evaluates to " +
                              e.evaluated);
            r.backward.lambda = evaluated;
        }
        if (form_value(r.m, r.forward.x, r.forward.y) != r.forward.lambda ||
            form_value(r.n, r.backward.x, r.backward.y) != r.backward.lambda)
            d.problems.push_back("published row inconsistent with F: " +
                                 detail::joined(std::tuple(g.m, g.n, g.x, g.y, g.xr, g.yr)));
        out.push_back(std::move(r));
    }
    return out;
}

/**
 * Compares scan rows against published pair rows. Each orientation must agree
 * as a multiset of (m, n, x, y, lambda), and the multiset of (m, n, lambda,
 * lambda') pairs must agree. Rows whose matching of forward to backward
 * solution differs within the same (lambda, lambda') class are noted, not
 * failed: the class determines the pairing only up to such swaps.
 */
inline TableDiff compare_pair_rows(const std::vector<ScanRow>& computed, const std::vector<ScanRow>& golden,
                                   TableDiff d = {}) {
    using Side = std::tuple<Int, Int, Int, Int, Int>;
    using Pair = std::tuple<Int, Int, Int, Int>;
    using Full = std::tuple<Int, Int, Int, Int, Int, Int, Int, Int>;
    std::vector<Side> gf, gb, cf, cb;
    std::vector<Pair> gp, cp;
    std::vector<Full> gfull, cfull;
    auto add = [](const ScanRow& r, std::vector<Side>& f, std::vector<Side>& b, std::vector<Pair>& p,
                  std::vector<Full>& full) {
        f.emplace_back(r.m, r.n, r.forward.x, r.forward.y, r.forward.lambda);
        b.emplace_back(r.m, r.n, r.backward.x, r.backward.y, r.backward.lambda);
        p.emplace_back(r.m, r.n, r.forward.lambda, r.backward.lambda);
        full.emplace_back(r.m, r.n, r.forward.x, r.forward.y, r.forward.lambda, r.backward.x, r.backward.y,
                          r.backward.lambda);
    };
    for (const auto& r : golden) add(r, gf, gb, gp, gfull);
    for (const auto& r : computed) add(r, cf, cb, cp, cfull);
    d.expected = golden.size();
    d.computed = computed.size();
    detail::multiset_diff(gf, cf, "forward solution", d);
    detail::multiset_diff(gb, cb, "backward solution", d);
    detail::multiset_diff(gp, cp, "(lambda, lambda') pair", d);
    std::sort(gfull.begin(), gfull.end());
    std::sort(cfull.begin(), cfull.end());
    std::vector<Full> common, regrouped;
    std::set_intersection(gfull.begin(), gfull.end(), cfull.begin(), cfull.end(), std::back_inserter(common));
    std::set_difference(gfull.begin(), gfull.end(), cfull.begin(), cfull.end(), std::back_inserter(regrouped));
    d.exact_rows = common.size();
    for (const auto& r : regrouped) d.notes.push_back("published pairing differs: " + detail::joined(r));
    return d;
}

/// Distinct (m, n) with integral n != m over a set of enumerate records.
inline std::vector<std::pair<Int, Int>> integer_pairs(const std::vector<OverlapRecord>& records) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& r : records)
        if (r.n_integral && !r.excluded && r.n.get_num() != r.m) out.emplace_back(r.m, r.n.get_num());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace thuecubic

#endif  // THUECUBIC_REPRODUCTION_HPP
