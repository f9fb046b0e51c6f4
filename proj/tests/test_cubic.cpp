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

TEST(Classify, Examples) {
    EXPECT_EQ(classify(Int(-8)).tag, GaloisGroup::C2);
    const GaloisClass nine = classify(Int(-9));
    EXPECT_EQ(nine.tag, GaloisGroup::C3);
    EXPECT_EQ(nine.c3_witness, Int(1));
    EXPECT_EQ(nine.mu(), 3);
    EXPECT_EQ(classify(Int(-10)).tag, GaloisGroup::S3);
    EXPECT_EQ(classify(Int(-10)).mu(), 1);
    EXPECT_EQ(classify(Int(-8)).mu(), 2);
    EXPECT_THROW(classify(Int(0)), std::invalid_argument);
}

// Oracle: rational root of f_m for C2, square discriminant (by Sylvester) for C3.
TEST(Classify, AgreesWithRootAndDiscriminantOracle) {
    for (long m = -10000; m <= 10000; ++m) {
        if (m == 0) continue;
        const IntPoly f = cubic_poly(Int(m));
        const bool reducible = !rational_roots(f).empty();
        const bool square_disc = is_perfect_square(discriminant(f));
        const GaloisGroup want = reducible ? GaloisGroup::C2 : square_disc ? GaloisGroup::C3 : GaloisGroup::S3;
        const GaloisClass got = classify(Int(m));
        ASSERT_EQ(got.tag, want) << m;
        EXPECT_EQ(reducible, m == -8) << m;
        if (got.tag == GaloisGroup::C3) {
            const Int& b = *got.c3_witness;
            EXPECT_GE(b, 0);
            EXPECT_EQ(Int(-b * b - b - 7), m);
        }
    }
}

TEST(Classify, CyclicWitnessRoundTrip) {
    for (long b = 0; b <= 100; ++b) {
        const GaloisClass g = classify(Int(-b * b - b - 7));
        ASSERT_EQ(g.tag, GaloisGroup::C3) << b;
        EXPECT_EQ(g.c3_witness, Int(b));
    }
}

TEST(TotallyReal, ExamplesAndDiscriminantSign) {
    EXPECT_TRUE(is_totally_real(Int(-7)));
    EXPECT_FALSE(is_totally_real(Int(-6)));
    EXPECT_FALSE(is_totally_real(Int(5)));
    EXPECT_THROW(is_totally_real(Int(0)), std::invalid_argument);
    for (long m = -2000; m <= 2000; ++m)
        if (m != 0) EXPECT_EQ(is_totally_real(Int(m)), cubic_discriminant(Int(m)) > 0) << m;
}

TEST(FormValue, Examples) {
    EXPECT_EQ(form_value(Int(-6), Int(-4), Int(1)), 2);
    EXPECT_EQ(form_value(Int(-10), Int(-5), Int(1)), -5);
    const BinaryCubicForm f{Int(123456789)};
    EXPECT_EQ(f(Int(1), Int(0)), 1);
    EXPECT_EQ(f.dehomogenized().evaluate(Int(7)), f(Int(7), Int(1)));
}

TEST(Tschirnhausen, Examples) {
    EXPECT_TRUE(tschirnhausen_check(Int(-8)));
    EXPECT_EQ(form_poly(Int(-8)), (IntPoly{Int(2), Int(1)} * IntPoly{Int(44), Int(14), Int(1)}));
    EXPECT_TRUE(tschirnhausen_check(Int(1)));
    EXPECT_EQ(form_poly(Int(1)), (IntPoly{Int(-29), Int(-9), Int(-2), Int(1)}));
    EXPECT_TRUE(tschirnhausen_check(Int(-6)));
    EXPECT_THROW(tschirnhausen_check(Int(0)), std::invalid_argument);
}

TEST(Tschirnhausen, HoldsOnRange) {
    for (long m = -100; m <= 100; ++m)
        if (m != 0) EXPECT_TRUE(tschirnhausen_check(Int(m))) << m;
}

}  // namespace
}  // namespace thuecubic
