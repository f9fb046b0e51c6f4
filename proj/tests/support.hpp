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

#ifndef THUECUBIC_TESTS_SUPPORT_HPP
#define THUECUBIC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "thuecubic.hpp"

namespace thuecubic::testing {

/// Fixed seed: every run draws the same cases.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x7475652d637562ULL);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline long nonzero(long lo, long hi) {
    for (;;)
        if (const long v = uniform(lo, hi); v != 0) return v;
}

inline IntPoly random_poly(int degree, long bound) {
    std::vector<Int> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(uniform(-bound, bound));
    c.emplace_back(nonzero(-bound, bound));
    return IntPoly(std::move(c));
}

inline std::vector<Int> positive_divisors(const Int& v) {
    std::vector<Int> out;
    const Int a = abs(v);
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        if (d * d != a) out.push_back(Int(a / d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Rational roots by testing every +-(divisor of constant)/(divisor of leading).
inline std::vector<Rat> divisor_pair_roots(const IntPoly& p) {
    std::size_t k = 0;
    while (p.coeff(k) == 0) ++k;
    std::vector<Rat> out;
    if (k > 0) out.emplace_back(0);
    const Int c0 = p.coeff(k);
    const Int lc = p.leading();
    const RatPoly rp = to_rat(p);
    for (const auto& a : positive_divisors(c0))
        for (const auto& b : positive_divisors(lc))
            for (int s : {1, -1}) {
                const Rat u = make_rat(Int(s * a), b);
                if (rp.evaluate(u) == 0) out.push_back(u);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace thuecubic::testing

#endif  // THUECUBIC_TESTS_SUPPORT_HPP
