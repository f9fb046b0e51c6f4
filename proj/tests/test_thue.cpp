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

#include <map>

#include <gtest/gtest.h>

#include "support.hpp"

namespace thuecubic {
namespace {

using testing::nonzero;
using testing::uniform;

// Exact oracle: integer roots of the monic cubic F_m(X, y) - lambda for each y.
std::vector<PrimitiveSolution> solve_by_rational_roots(const Int& m, const Int& lambda, long y_bound) {
    std::vector<PrimitiveSolution> out;
    if (integer_cube_root(lambda) == Int(1)) out.push_back({Int(1), Int(0), lambda});
    for (long yl = 1; yl <= y_bound; ++yl) {
        const Int y(yl);
        const IntPoly p{Int(-m * (2 * m + 27) * y * y * y - lambda), Int(-9 * m * y * y), Int(-2 * m * y), Int(1)};
        for (const auto& u : rational_roots(p))
            if (gcd(u.get_num(), y) == 1) out.push_back({u.get_num(), y, lambda});
    }
    std::sort(out.begin(), out.end(), row_order);
    return out;
}

TEST(LambdaCandidates, Examples) {
    EXPECT_EQ(lambda_candidates(Int(-7)), (std::vector<Int>{1, 7}));
    EXPECT_EQ(lambda_candidates(Int(-8)),
              (std::vector<Int>{1, 2, 4, 5, 8, 10, 16, 20, 25, 40, 50, 80, 100, 200, 400}));
    EXPECT_EQ(lambda_candidates(Int(-9)), (std::vector<Int>{1, 3, 9, 27, 81, 243, 729, 2187, 6561}));
    EXPECT_THROW(lambda_candidates(Int(0)), std::invalid_argument);
}

TEST(SolveThue, Examples) {
    const auto a = solve_thue(Int(-10), Int(-5), 10);
    EXPECT_EQ(a, (std::vector<PrimitiveSolution>{{Int(-5), Int(1), Int(-5)}}));
    const auto b = solve_thue(Int(-4), Int(-484), 400);
    EXPECT_NE(std::find(b.begin(), b.end(), PrimitiveSolution{Int(-1384), Int(365), Int(-484)}), b.end());
    for (long m : {-9L, 1L, 77L}) {
        const auto c = solve_thue(Int(m), Int(1), 0);
        EXPECT_NE(std::find(c.begin(), c.end(), PrimitiveSolution{Int(1), Int(0), Int(1)}), c.end());
    }
    EXPECT_THROW(solve_thue(Int(-6), Int(0), 10), std::invalid_argument);
    EXPECT_THROW(solve_thue(Int(0), Int(1), 10), std::invalid_argument);
}

TEST(SolveThue, MatchesExactOracle) {
    for (int t = 0; t < 60; ++t) {
        const Int m = nonzero(-40, 40);
        for (const auto& l : lambda_candidates(m)) {
            if (l > 100000) break;
            for (const Int lambda : {l, Int(-l)})
                EXPECT_EQ(solve_thue(m, lambda, 60), solve_by_rational_roots(m, lambda, 60))
                    << "m=" << m << " lambda=" << lambda;
        }
    }
}

TEST(SolveThue, LargeParametersLeaveFastPath) {
    // |m| past the 64-bit window forces the exact path.
    const Int m("-2000000000000");
    for (const auto& s : solve_thue(m, Int(1), 50)) EXPECT_EQ(form_value(m, s.x, s.y), 1);
    EXPECT_EQ(solve_thue(Int(-4913), Int(5 * 5 * 5 * 17 * 17 * 17), 5),
              solve_by_rational_roots(Int(-4913), Int(5 * 5 * 5 * 17 * 17 * 17), 5));
}

TEST(NFromSolution, Examples) {
    EXPECT_EQ(n_from_solution(Int(-6), {Int(-4), Int(1), Int(2)}), Rat(12));
    EXPECT_EQ(n_from_solution(Int(-10), {Int(-5), Int(1), Int(-5)}), Rat(-400));
    EXPECT_EQ(n_from_solution(Int(31), {Int(1), Int(0), Int(1)}), Rat(31));
    EXPECT_EQ(n_from_solution(Int(-4), {Int(-1384), Int(365), Int(-484)}),
              parse_rat("206613902738896/11"));
    EXPECT_THROW(n_from_solution(Int(-6), {Int(-4), Int(1), Int(3)}), std::invalid_argument);
}

TEST(Identity, CorrectionTermMatchesCubeForm) {
    // m(x^2 + 9xy - 3my^2)^3 - m F^2 = m(4m + 27) phi
    for (int t = 0; t < 100; ++t) {
        const Int m = nonzero(-100000, 100000), x = uniform(-100000, 100000), y = uniform(-100000, 100000);
        const Int q = x * x + 9 * x * y - 3 * m * y * y;
        const Int f = form_value(m, x, y);
        EXPECT_EQ(Int(m * q * q * q - m * f * f), Int(m * (4 * m + 27) * phi_form(m, x, y)));
    }
}

TEST(Identity, PhiFactorsAtCyclicParameters) {
    for (long b = 0; b <= 50; ++b) {
        const Int m(-b * b - b - 7);
        // phi_m(X, 1) = (X^2 + 9X + 27 + m)(X^3 - mX^2 - m^2)
        const IntPoly phi = IntPoly{Int(27 + m), Int(9), Int(1)} * IntPoly{Int(-m * m), Int(0), Int(-m), Int(1)};
        for (long x = -60; x <= 60; ++x) ASSERT_EQ(phi.evaluate(Int(x)), phi_form(m, Int(x), Int(1)));
        const RatPoly lin = to_rat(IntPoly{Int(-(b - 4)), Int(1)} * IntPoly{Int(b + 5), Int(1)});
        EXPECT_TRUE(divmod(to_rat(phi), lin).second.is_zero()) << b;
    }
}

TEST(SelfPairs, Examples) {
    using S = PrimitiveSolution;
    EXPECT_EQ(self_pair_solutions(Int(-9)),
              (std::vector<S>{{Int(1), Int(0), Int(1)}, {Int(-6), Int(1), Int(27)}, {Int(-3), Int(1), Int(-27)}}));
    EXPECT_EQ(self_pair_solutions(Int(-8)), (std::vector<S>{{Int(1), Int(0), Int(1)}, {Int(-4), Int(1), Int(-8)}}));
    EXPECT_EQ(self_pair_solutions(Int(-10)), (std::vector<S>{{Int(1), Int(0), Int(1)}}));
    EXPECT_THROW(self_pair_solutions(Int(0)), std::invalid_argument);
}

TEST(Enumerate, IntegerPartnerExamples) {
    EXPECT_EQ(integer_partners(enumerate_overlaps(Int(-5), 10)), (std::vector<Int>{-5, 625}));
    EXPECT_EQ(integer_partners(enumerate_overlaps(Int(3), 10)), (std::vector<Int>{3}));
    EXPECT_EQ(integer_partners(enumerate_overlaps(Int(-7), 10)), (std::vector<Int>{-1588867, -189, -49, -7}));
    EXPECT_THROW(enumerate_overlaps(Int(0)), std::invalid_argument);
}

TEST(Enumerate, ExclusionsAreFlagged) {
    const auto six = enumerate_overlaps(Int(-6));
    std::size_t zeros = 0;
    for (const auto& r : six)
        if (r.excluded == Exclusion::n_zero) {
            ++zeros;
            EXPECT_EQ(r.n, 0);
        }
    EXPECT_EQ(zeros, 2u);
    const auto eight = enumerate_overlaps(Int(-8));
    const auto crit = std::count_if(eight.begin(), eight.end(), [](const OverlapRecord& r) {
        return r.excluded == Exclusion::n_critical && r.n == critical_n();
    });
    EXPECT_EQ(crit, 1);
}

TEST(Enumerate, InvariantsOnEverySolution) {
    for (long m = -30; m <= 30; ++m) {
        if (m == 0) continue;
        const auto records = enumerate_overlaps(Int(m), 300);
        for (const auto& r : records) {
            const auto& s = r.solution;
            EXPECT_TRUE(is_normalized(s));
            EXPECT_EQ(form_value(r.m, s.x, s.y), s.lambda);
            EXPECT_EQ(gcd(s.lambda, s.y), 1);
            EXPECT_TRUE(divisor_conclusion_check(r.m, s));
            EXPECT_EQ(r.n_integral, is_integral(r.n));
        }
        EXPECT_TRUE(std::is_sorted(records.begin(), records.end(), [](const auto& a, const auto& b) {
            return row_order(a.solution, b.solution);
        }));
    }
}

TEST(Enumerate, SolutionsPerIntegralPartner) {
    // S3: exactly one solution per integral n. C3: three. m = -8: two map to -8.
    for (long m = -10; m <= 5; ++m) {
        if (m == 0) continue;
        std::map<Int, int> count;
        const auto records = enumerate_overlaps(Int(m));
        for (const auto& r : records)
            if (r.n_integral && !r.excluded) ++count[r.n.get_num()];
        const GaloisClass g = classify(Int(m));
        for (const auto& [n, c] : count) {
            if (g.tag == GaloisGroup::C2) {
                EXPECT_EQ(c, 2) << m << " -> " << n;
            } else {
                EXPECT_EQ(c, g.mu()) << m << " -> " << n;
            }
            if (n != m) {
                const IsomReport iso = isom_test(Int(m), n);
                EXPECT_TRUE(iso.same_field);
                for (const auto& r : records)
                    if (r.n == Rat(n)) {
                        const Rat u = make_rat(r.solution.x, r.solution.y);
                        EXPECT_NE(std::find(iso.roots.begin(), iso.roots.end(), u), iso.roots.end());
                    }
            }
        }
    }
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
    for (long m : {-8L, -7L, 2L, -4L}) {
        const auto one = enumerate_overlaps(Int(m), 1000, 1);
        EXPECT_EQ(one, enumerate_overlaps(Int(m), 1000, 4));
        EXPECT_EQ(one, enumerate_overlaps(Int(m), 1000, 3));
    }
}

TEST(CountBound, Examples) {
    EXPECT_TRUE(count_bound_check(Int(-7)));
    EXPECT_TRUE(count_bound_check(Int(-8)));
    EXPECT_TRUE(count_bound_check(Int(5)));
    EXPECT_EQ(enumerate_overlaps(Int(-7)).size(), 12u);
}

}  // namespace
}  // namespace thuecubic
