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

#include <gtest/gtest.h>

#include "support.hpp"

namespace thuecubic {
namespace {

TEST(Identities, TranscribedCofactorsAtOne) {
    const BezoutPair bp = bezout_cofactors(Int(1));
    EXPECT_EQ(bp.p, (IntPoly{Int(-2797), Int(-3162), Int(18), Int(101), Int(84), Int(-15)}));
    EXPECT_EQ(bp.q, (IntPoly{Int(33952), Int(-20367), Int(3268), Int(2875), Int(381), Int(15)}));
}

TEST(Identities, CofactorDegrees) {
    for (long m = -50; m <= 50; ++m) {
        if (m == 0) continue;
        const BezoutPair bp = bezout_cofactors(Int(m));
        EXPECT_EQ(bp.p.degree(), 5);
        EXPECT_EQ(bp.q.degree(), 5);
        EXPECT_EQ(bp.p.leading(), -15);
        EXPECT_EQ(bp.q.leading(), Int(15 * m));
    }
}

TEST(Identities, ResultantValue) {
    EXPECT_TRUE(resultant_value_check(Int(-6)));
    EXPECT_TRUE(resultant_value_check(Int(1)));
    EXPECT_TRUE(resultant_value_check(Int(-7)));
    EXPECT_EQ(resultant(numerator_sextic(Int(1)), denominator_sextic(Int(1))), ipow(Int(31), 18));
    EXPECT_EQ(resultant(numerator_sextic(Int(-7)), denominator_sextic(Int(-7))), ipow(Int(7), 12));
    EXPECT_THROW(resultant_value_check(Int(0)), std::invalid_argument);
}

TEST(Identities, BezoutConstant) {
    auto constant = [](long m) {
        const BezoutPair bp = bezout_cofactors(Int(m));
        return numerator_sextic(Int(m)) * bp.p + denominator_sextic(Int(m)) * bp.q;
    };
    EXPECT_EQ(constant(-6), IntPoly::constant(Int(-52488)));
    EXPECT_EQ(constant(1), IntPoly::constant(ipow(Int(31), 5)));
    EXPECT_EQ(constant(-8), IntPoly::constant(Int(1600000)));
    EXPECT_TRUE(bezout_identity_check(Int(-6)));
    EXPECT_THROW(bezout_identity_check(Int(0)), std::invalid_argument);
}

TEST(Identities, ExpandedSexticsMatchPrintedCoefficients) {
    for (long ml = -20; ml <= 20; ++ml) {
        if (ml == 0) continue;
        const Int m(ml);
        const IntPoly g{Int(-27 * m * m * m * m), Int(243 * m * m * m), Int(27 * (m - 27) * m * m),
                        Int(-81 * m * (2 * m - 9)), Int(-9 * (m - 27) * m), Int(27 * m), m};
        const IntPoly h{Int(m * m * (2 * m + 27) * (2 * m + 27)), Int(18 * m * m * (2 * m + 27)),
                        Int(m * m * (8 * m + 189)), Int(2 * m * (16 * m - 27)), Int(2 * m * (2 * m - 9)),
                        Int(-4 * m), Int(1)};
        EXPECT_EQ(numerator_sextic(m), g);
        EXPECT_EQ(denominator_sextic(m), h);
    }
}

TEST(Identities, HomogenizedExamples) {
    EXPECT_TRUE(homogenized_identity_check(Int(-6), Int(-4), Int(1)));
    EXPECT_TRUE(homogenized_identity_check(Int(-4), Int(-1384), Int(365)));
    EXPECT_TRUE(homogenized_identity_check(Int(1), Int(0), Int(1)));
    EXPECT_THROW(homogenized_identity_check(Int(1), Int(1), Int(0)), std::invalid_argument);
    EXPECT_THROW(homogenized_identity_check(Int(0), Int(1), Int(1)), std::invalid_argument);
}

TEST(Identities, HomogenizedAtRandomPoints) {
    for (int t = 0; t < 200; ++t) {
        const Int m = testing::nonzero(-1000, 1000);
        EXPECT_TRUE(homogenized_identity_check(m, Int(testing::uniform(-10000, 10000)),
                                               Int(testing::nonzero(-10000, 10000))));
    }
}

TEST(Identities, DivisorConclusionExamples) {
    EXPECT_TRUE(divisor_conclusion_check(Int(-6), {Int(-13), Int(3), Int(-1)}));
    EXPECT_TRUE(divisor_conclusion_check(Int(-9), {Int(0), Int(1), Int(81)}));
    EXPECT_TRUE(divisor_conclusion_check(Int(-8), {Int(-34), Int(7), Int(400)}));
    EXPECT_FALSE(divisor_conclusion_check(Int(-6), {Int(0), Int(1), Int(7)}));
}

}  // namespace
}  // namespace thuecubic
