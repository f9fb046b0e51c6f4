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

#ifndef THUECUBIC_SERIALIZE_HPP
#define THUECUBIC_SERIALIZE_HPP

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scan.hpp"
#include "thue.hpp"

// Exact values always travel as decimal strings: n = 206613902738896/11 does
// not survive a trip through a double.

namespace thuecubic {

enum class OutputFormat { json_lines, csv, pretty };

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "json" || s == "jsonl" || s == "json_lines") return OutputFormat::json_lines;
    if (s == "csv") return OutputFormat::csv;
    if (s == "pretty") return OutputFormat::pretty;
    throw std::invalid_argument("unknown output format: " + s);
}

using Json = nlohmann::ordered_json;

namespace detail {

inline Int json_int(const Json& j, const char* key) {
    return parse_int(j.at(key).get<std::string>());
}

inline Rat json_rat(const Json& j, const char* key) {
    return parse_rat(j.at(key).get<std::string>());
}

inline std::string bracketed(const OverlapRecord& r) {
    const std::string n = to_string(r.n);
    return r.excluded ? "[ " + n + " ]" : n;
}

inline void pretty_table(std::ostream& os, const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << "  ";
            os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        os << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows) line(r);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// OverlapRecord

inline Json to_json(const OverlapRecord& r) {
    Json j;
    j["m"] = to_string(r.m);
    j["lambda"] = to_string(r.solution.lambda);
    j["x"] = to_string(r.solution.x);
    j["y"] = to_string(r.solution.y);
    j["n"] = to_string(r.n);
    j["n_integral"] = r.n_integral;
    j["excluded"] = r.excluded ? Json(to_string(*r.excluded)) : Json(nullptr);
    return j;
}

inline OverlapRecord overlap_from_json(const Json& j) {
    OverlapRecord r;
    r.m = detail::json_int(j, "m");
    r.solution = {detail::json_int(j, "x"), detail::json_int(j, "y"), detail::json_int(j, "lambda")};
    r.n = detail::json_rat(j, "n");
    r.n_integral = j.at("n_integral").get<bool>();
    const Json& ex = j.at("excluded");
    if (!ex.is_null()) {
        const auto s = ex.get<std::string>();
        if (s == "n_zero") r.excluded = Exclusion::n_zero;
        else if (s == "n_critical") r.excluded = Exclusion::n_critical;
        else throw std::invalid_argument("overlap_from_json: unknown exclusion " + s);
    }
    return r;
}

inline void write_overlaps(std::ostream& os, const std::vector<OverlapRecord>& rows, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json_lines:
            for (const auto& r : rows) os << to_json(r).dump() << '\n';
            break;
        case OutputFormat::csv:
            os << "m,lambda,x,y,n,n_integral,excluded\n";
            for (const auto& r : rows)
                os << r.m << ',' << r.solution.lambda << ',' << r.solution.x << ',' << r.solution.y << ','
                   << to_string(r.n) << ',' << (r.n_integral ? "true" : "false") << ','
                   << (r.excluded ? to_string(*r.excluded) : "") << '\n';
            break;
        case OutputFormat::pretty: {
            std::vector<std::vector<std::string>> cells;
            for (const auto& r : rows)
                cells.push_back({to_string(r.m), to_string(r.solution.lambda),
                                 "(" + to_string(r.solution.x) + "," + to_string(r.solution.y) + ")",
                                 detail::bracketed(r)});
            detail::pretty_table(os, {"m", "lambda", "(x,y)", "n"}, cells);
            break;
        }
    }
}

// ---------------------------------------------------------------------------
// ScanRow

inline Json to_json(const ScanRow& r) {
    Json j;
    j["m"] = to_string(r.m);
    j["n"] = to_string(r.n);
    j["x"] = to_string(r.forward.x);
    j["y"] = to_string(r.forward.y);
    j["lambda"] = to_string(r.forward.lambda);
    j["xr"] = to_string(r.backward.x);
    j["yr"] = to_string(r.backward.y);
    j["lambda_r"] = to_string(r.backward.lambda);
    return j;
}

inline ScanRow scan_row_from_json(const Json& j) {
    ScanRow r;
    r.m = detail::json_int(j, "m");
    r.n = detail::json_int(j, "n");
    r.forward = {detail::json_int(j, "x"), detail::json_int(j, "y"), detail::json_int(j, "lambda")};
    r.backward = {detail::json_int(j, "xr"), detail::json_int(j, "yr"), detail::json_int(j, "lambda_r")};
    return r;
}

inline void write_scan_rows(std::ostream& os, const std::vector<ScanRow>& rows, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json_lines:
            for (const auto& r : rows) os << to_json(r).dump() << '\n';
            break;
        case OutputFormat::csv:
            os << "m,n,x,y,lambda,xr,yr,lambda_r\n";
            for (const auto& r : rows)
                os << r.m << ',' << r.n << ',' << r.forward.x << ',' << r.forward.y << ',' << r.forward.lambda
                   << ',' << r.backward.x << ',' << r.backward.y << ',' << r.backward.lambda << '\n';
            break;
        case OutputFormat::pretty: {
            std::vector<std::vector<std::string>> cells;
            for (const auto& r : rows)
                cells.push_back({to_string(r.m), to_string(r.n),
                                 "(" + to_string(r.forward.x) + "," + to_string(r.forward.y) + ")",
                                 to_string(r.forward.lambda),
                                 "(" + to_string(r.backward.x) + "," + to_string(r.backward.y) + ")",
                                 to_string(r.backward.lambda)});
            detail::pretty_table(os, {"m", "n", "F_m(x,y)", "lambda", "F_n(x,y)", "lambda'"}, cells);
            break;
        }
    }
}

}  // namespace thuecubic

#endif  // THUECUBIC_SERIALIZE_HPP
