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

using testing::nonzero;
using testing::uniform;

TEST(Factorize, SmallExamples) {
    const Factorization a = factorize(Int(52488));
    EXPECT_EQ(a.sign, 1);
    EXPECT_EQ(a.factors, (std::vector<PrimePower>{{Int(2), 3}, {Int(3), 8}}));

    const Factorization one = factorize(Int(1));
    EXPECT_EQ(one.sign, 1);
    EXPECT_TRUE(one.factors.empty());

    const Factorization b = factorize(Int(-343));
    EXPECT_EQ(b.sign, -1);
    EXPECT_EQ(b.factors, (std::vector<PrimePower>{{Int(7), 3}}));
}

TEST(Factorize, RejectsZero) { EXPECT_THROW(factorize(Int(0)), std::invalid_argument); }

TEST(Factorize, ReconstructsRandomValues) {
    for (int i = 0; i < 2000; ++i) {
        const Int v = nonzero(-1000000000L, 1000000000L);
        const Factorization f = factorize(v);
        EXPECT_EQ(f.value(), v);
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
            EXPECT_GE(f.factors[k].exponent, 1u);
            EXPECT_NE(mpz_probab_prime_p(f.factors[k].prime.get_mpz_t(), 30), 0);
            if (k) {
                EXPECT_LT(f.factors[k - 1].prime, f.factors[k].prime);
            }
        }
    }
}

TEST(Factorize, LargeSemiprimeUsesRho) {
    // Both factors are past the trial-division limit.
    const Int p("1000000007"), q("998244353");
    const Factorization f = factorize(Int(p * q * 12));
    EXPECT_EQ(f.value(), Int(p * q * 12));
    EXPECT_EQ(f.factors.size(), 4u);
}

TEST(Factorize, CombineMatchesDirect) {
    for (long m : {-6L, -7L, -8L, -200000L, 199999L, 12L}) {
        const Factorization c = combine(factorize(Int(m)), 3, factorize(Int(4 * m + 27)), 5);
        const Int d = ipow(Int(m), 3) * ipow(Int(4 * m + 27), 5);
        EXPECT_EQ(c.value(), d) << m;
    }
}

TEST(SquareDivisorRoots, Examples) {
    EXPECT_EQ(square_divisor_roots(factorize(Int(52488))),
              (std::vector<Int>{1, 2, 3, 6, 9, 18, 27, 54, 81, 162}));
    EXPECT_EQ(square_divisor_roots(factorize(Int(343))), (std::vector<Int>{1, 7}));
    EXPECT_EQ(square_divisor_roots(factorize(Int(1))), (std::vector<Int>{1}));
}

TEST(SquareDivisorRoots, MatchesBruteForce) {
    for (int i = 0; i < 300; ++i) {
        const long d = uniform(1, 1000000);
        std::vector<Int> brute;
        for (long mu = 1; mu * mu <= d; ++mu)
            if (d % (mu * mu) == 0) brute.emplace_back(mu);
        EXPECT_EQ(square_divisor_roots(factorize(Int(d))), brute) << d;
    }
}

TEST(PerfectSquare, Examples) {
    EXPECT_EQ(perfect_square_root(Int(49)), Int(7));
    EXPECT_EQ(perfect_square_root(Int(0)), Int(0));
    EXPECT_FALSE(is_perfect_square(Int(1300)));
    EXPECT_FALSE(is_perfect_square(Int(-4)));
}

TEST(Squarefree, Examples) {
    EXPECT_EQ(squarefree_part(Int(5)), 5);
    EXPECT_EQ(squarefree_part(Int(12)), 3);
    EXPECT_EQ(squarefree_part(Int(-4)), -1);
    EXPECT_THROW(squarefree_part(Int(0)), std::invalid_argument);
}

TEST(Squarefree, Reconstructs) {
    for (int i = 0; i < 1000; ++i) {
        const Int v = nonzero(-10000000L, 10000000L);
        const SquarefreeDecomposition d = squarefree_decompose(v);
        EXPECT_EQ(Int(d.squarefree * d.root * d.root), v);
        EXPECT_EQ(squarefree_decompose(d.squarefree).root, 1) << v;
    }
}

TEST(CubeRoot, Examples) {
    EXPECT_EQ(integer_cube_root(Int(1)), Int(1));
    EXPECT_EQ(integer_cube_root(Int(-8)), Int(-2));
    EXPECT_FALSE(integer_cube_root(Int(50)).has_value());
    EXPECT_EQ(integer_cube_root(Int(0)), Int(0));
}

TEST(Rationals, LowestTermsAndParsing) {
    const Rat r = make_rat(Int(6), Int(-4));
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(parse_rat("206613902738896/11")), "206613902738896/11");
    EXPECT_EQ(to_string(parse_rat("0")), "0");
    EXPECT_THROW(make_rat(Int(1), Int(0)), std::domain_error);
    EXPECT_THROW(parse_int("12a"), std::invalid_argument);
}

}  // namespace
}  // namespace thuecubic
