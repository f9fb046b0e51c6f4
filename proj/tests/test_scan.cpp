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

#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

namespace thuecubic {
namespace {

bool square_condition(long m, long n) {
    const Int v = Int(4 * m + 27) * Int(4 * n + 27);
    return v >= 0 && is_perfect_square(v);
}

TEST(SquareCondition, MatchesBruteForceGrid) {
    const IntRange r{-200, 200};
    for (long m = r.lo; m <= r.hi; ++m) {
        if (m == 0) continue;
        std::vector<long> brute;
        for (long n = r.lo; n <= r.hi; ++n)
            if (n != 0 && n != m && square_condition(m, n)) brute.push_back(n);
        ASSERT_EQ(square_condition_partners(m, r), brute) << m;
    }
    EXPECT_THROW(square_condition_partners(0, r), std::invalid_argument);
    EXPECT_TRUE(square_condition_partners(-6, {5, 4}).empty());
}

TEST(ResidueSieve, NeverDropsARealCoincidence) {
    // Every candidate surviving the square condition is checked exactly.
    for (long m = -60; m <= 60; ++m) {
        if (m == 0) continue;
        const ResidueSieve sieve(m);
        for (long n : square_condition_partners(m, {-3000, 3000})) {
            if (!rational_roots(resolvent_poly(Int(m), Int(n))).empty()) {
                EXPECT_TRUE(sieve.may_have_rational_root(n)) << m << ", " << n;
            }
        }
    }
}

TEST(ResidueSieve, RemovesMostCandidates) {
    ScanStats st;
    scan(ScanConfig::imaginary(20000), &st);
    EXPECT_GT(st.candidates, 0u);
    EXPECT_GT(st.sieved_out * 2, st.candidates);
    EXPECT_EQ(st.candidates, st.sieved_out + st.resolvent_tests);
}

TEST(PairedSolutions, ThreeRowsForCyclicPair) {
    const auto rows = paired_solutions(Int(-9), Int(-27));
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& r : rows) {
        EXPECT_EQ(form_value(r.m, r.forward.x, r.forward.y), r.forward.lambda);
        EXPECT_EQ(form_value(r.n, r.backward.x, r.backward.y), r.backward.lambda);
        EXPECT_TRUE(inverse_root_maps(r.m, r.forward.x, r.forward.y, r.n, r.backward.x, r.backward.y));
    }
    EXPECT_TRUE(paired_solutions(Int(1), Int(2)).empty());
    EXPECT_THROW(paired_solutions(Int(3), Int(3)), std::invalid_argument);
}

TEST(PairedSolutions, SingleRootPair) {
    // Single root -9/2 of R_{-6,54}.
    const auto rows = paired_solutions(Int(-6), Int(54));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].forward, (PrimitiveSolution{Int(-9), Int(2), form_value(Int(-6), Int(-9), Int(2))}));
}

TEST(PairedSolutions, AgreesWithEnumerate) {
    // Each integral partner from the Thue side shows up in the paired rows.
    for (long m = -10; m <= 5; ++m) {
        if (m == 0) continue;
        for (const auto& r : enumerate_overlaps(Int(m))) {
            if (!r.n_integral || r.excluded || r.n.get_num() == r.m) continue;
            const auto rows = paired_solutions(r.m, r.n.get_num());
            const bool present = std::any_of(rows.begin(), rows.end(),
                                             [&](const ScanRow& s) { return s.forward == r.solution; });
            EXPECT_TRUE(present) << m << " -> " << r.n;
        }
    }
}

TEST(Scan, SmallWindowMatchesDirectSearch) {
    ScanConfig cfg{{-60, 60}, {-400, 400}, PartnerSide::any, 1};
    std::set<std::pair<Int, Int>> want;
    for (long m = -60; m <= 60; ++m) {
        if (m == 0) continue;
        for (long n = -400; n <= 400; ++n)
            if (n != 0 && n != m && isom_test(Int(m), Int(n)).same_field) want.emplace(m, n);
    }
    std::set<std::pair<Int, Int>> got;
    for (const auto& r : scan(cfg)) got.emplace(r.m, r.n);
    EXPECT_EQ(got, want);
}

TEST(Scan, ThreadCountAndRepetitionDoNotChangeOutput) {
    ScanConfig cfg = ScanConfig::imaginary(30000);
    const auto one = scan(cfg);
    EXPECT_EQ(one, scan(cfg));
    for (unsigned t : {2u, 5u, 8u}) {
        cfg.threads = t;
        EXPECT_EQ(scan(cfg), one) << t;
    }
    EXPECT_TRUE(std::is_sorted(one.begin(), one.end(), scan_row_order));
}

TEST(Scan, SidesAndValidation) {
    ScanConfig cfg{{-9, -9}, {-100, 100}, PartnerSide::below, 1};
    const auto below = scan(cfg);
    ASSERT_EQ(below.size(), 3u);
    for (const auto& r : below) EXPECT_EQ(r.n, -27);
    cfg.side = PartnerSide::above;
    EXPECT_TRUE(scan(cfg).empty());
    cfg.m_range = {1, 0};
    EXPECT_THROW(scan(cfg), std::invalid_argument);
}

}  // namespace
}  // namespace thuecubic
