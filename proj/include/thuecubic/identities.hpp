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

#ifndef THUECUBIC_IDENTITIES_HPP
#define THUECUBIC_IDENTITIES_HPP

#include <stdexcept>

#include "cubic.hpp"
#include "exact.hpp"
#include "polynomial.hpp"
#include "thue.hpp"

// Certificates behind the divisibility lambda^2 | m^3 (4m + 27)^5.

namespace thuecubic {

/// g(u) = m(u^2 + 9u - 3m)^3
inline IntPoly numerator_sextic(const Int& m) {
    return IntPoly{Int(-3 * m), Int(9), Int(1)}.pow(3) * m;
}

/// h(u) = F_m(u, 1)^2
inline IntPoly denominator_sextic(const Int& m) { return form_poly(m).pow(2); }

/// Cofactors p, q with g p + h q = m^3 (4m + 27)^5. Both have degree 5.
struct BezoutPair {
    IntPoly p;
    IntPoly q;
};

inline BezoutPair bezout_cofactors(const Int& m) {
    const Int m2 = m * m;
    const Int m3 = m2 * m;
    IntPoly p{
        Int(-m * (28 * m3 + 636 * m2 + 3591 * m - 1458)),
        Int(-6 * m * (26 * m2 + 339 * m + 162)),
        Int(-3 * m * (4 * m2 + 125 * m - 135)),
        Int(-(48 * m2 - 176 * m + 27)),
        Int(3 * (19 * m + 9)),
        Int(-15),
    };
    IntPoly q{
        Int(67 * m3 + 2538 * m2 + 11664 * m + 19683),
        Int(9 * (5 * m2 - 810 * m - 1458)),
        Int(-(26 * m2 + 1809 * m - 5103)),
        Int(-(68 * m - 2943)),
        Int(3 * (m + 126)),
        Int(15),
    };
    return {std::move(p), q * m};
}

inline bool resultant_value_check(const Int& m) {
    require_nonzero_parameter(m, "resultant_value_check");
    const Int expected = ipow(m, 12) * ipow(Int(4 * m + 27), 18);
    return resultant(numerator_sextic(m), denominator_sextic(m)) == expected;
}

inline bool bezout_identity_check(const Int& m) {
    require_nonzero_parameter(m, "bezout_identity_check");
    const BezoutPair bp = bezout_cofactors(m);
    const IntPoly lhs = numerator_sextic(m) * bp.p + denominator_sextic(m) * bp.q;
    return lhs == IntPoly::constant(thue_bound_value(m));
}

/// y^d p(x / y) for a nominal degree d.
inline Int homogenize_at(const IntPoly& p, int d, const Int& x, const Int& y) {
    Int acc = 0;
    for (int i = 0; i <= p.degree(); ++i)
        acc += p.coeff(static_cast<std::size_t>(i)) * ipow(x, static_cast<unsigned long>(i)) *
               ipow(y, static_cast<unsigned long>(d - i));
    return acc;
}

/// G(x, y) P(x, y) + F_m(x, y)^2 Q(x, y) = m^3 (4m + 27)^5 y^11 at one point.
inline bool homogenized_identity_check(const Int& m, const Int& x, const Int& y) {
    require_nonzero_parameter(m, "homogenized_identity_check");
    if (y == 0) throw std::invalid_argument("homogenized_identity_check: y must be nonzero");
    const BezoutPair bp = bezout_cofactors(m);
    const Int big_g = homogenize_at(numerator_sextic(m), 6, x, y);
    const Int big_p = homogenize_at(bp.p, 5, x, y);
    const Int big_q = homogenize_at(bp.q, 5, x, y);
    const Int f = form_value(m, x, y);
    return big_g * big_p + f * f * big_q == thue_bound_value(m) * ipow(y, 11);
}

inline bool divisor_conclusion_check(const Int& m, const PrimitiveSolution& s) {
    return divides(Int(s.lambda * s.lambda), thue_bound_value(m));
}

}  // namespace thuecubic

#endif  // THUECUBIC_IDENTITIES_HPP
