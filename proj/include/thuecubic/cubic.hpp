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

#ifndef THUECUBIC_CUBIC_HPP
#define THUECUBIC_CUBIC_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "exact.hpp"
#include "polynomial.hpp"

namespace thuecubic {

inline void require_nonzero_parameter(const Int& m, const char* who) {
    if (m == 0) throw std::invalid_argument(std::string(who) + ": parameter m must be nonzero");
}

/// f_m(X) = X^3 + mX + m
inline IntPoly cubic_poly(const Int& m) { return IntPoly{m, m, Int(0), Int(1)}; }

/// F_m(X, 1) = X^3 - 2mX^2 - 9mX - m(2m + 27)
inline IntPoly form_poly(const Int& m) {
    return IntPoly{Int(-m * (2 * m + 27)), Int(-9 * m), Int(-2 * m), Int(1)};
}

/// Discriminant of f_m in closed form: -m^2 (4m + 27).
inline Int cubic_discriminant(const Int& m) { return Int(-m * m * (4 * m + 27)); }

/// Discriminant of F_m(X, 1) in closed form: -m^2 (4m + 27)^3.
inline Int form_discriminant(const Int& m) { return Int(-m * m * ipow(Int(4 * m + 27), 3)); }

enum class GaloisGroup { S3, C3, C2 };

inline const char* to_string(GaloisGroup g) {
    switch (g) {
        case GaloisGroup::S3: return "S3";
        case GaloisGroup::C3: return "C3";
        case GaloisGroup::C2: return "C2";
    }
    return "?";
}

/// Number of rational roots of R_{m,n} when the two fields coincide.
inline int mu(GaloisGroup g) {
    switch (g) {
        case GaloisGroup::S3: return 1;
        case GaloisGroup::C3: return 3;
        case GaloisGroup::C2: return 2;
    }
    return 0;
}

inline int group_order(GaloisGroup g) {
    switch (g) {
        case GaloisGroup::S3: return 6;
        case GaloisGroup::C3: return 3;
        case GaloisGroup::C2: return 2;
    }
    return 0;
}

struct GaloisClass {
    GaloisGroup tag = GaloisGroup::S3;
    std::optional<Int> c3_witness;  // b >= 0 with m = -b^2 - b - 7

    int mu() const { return thuecubic::mu(tag); }

    friend bool operator==(const GaloisClass&, const GaloisClass&) = default;
};

/**
 * Galois group of f_m over Q from integer predicates only.
 *
 * f_m has a rational root exactly for m in {0, -8}, giving C2 at m = -8.
 * Otherwise the group is C3 iff the discriminant is a square, i.e.
 * -(4m + 27) = a^2; a is odd, so a = 2b + 1 and m = -b^2 - b - 7.
 */
inline GaloisClass classify(const Int& m) {
    require_nonzero_parameter(m, "classify");
    if (m == -8) return {GaloisGroup::C2, std::nullopt};
    if (auto a = perfect_square_root(Int(-(4 * m + 27)))) {
        const Int b = (*a - 1) / 2;
        return {GaloisGroup::C3, b};
    }
    return {GaloisGroup::S3, std::nullopt};
}

inline bool is_totally_real(const Int& m) {
    require_nonzero_parameter(m, "is_totally_real");
    return m <= -7;
}

/// F_m(x, y) = x^3 - 2m x^2 y - 9m x y^2 - m(2m + 27) y^3
inline Int form_value(const Int& m, const Int& x, const Int& y) {
    const Int x2 = x * x;
    const Int y2 = y * y;
    return Int(x2 * x - 2 * m * x2 * y - 9 * m * x * y2 - m * (2 * m + 27) * y2 * y);
}

/// The binary cubic form F_m as a value type.
struct BinaryCubicForm {
    Int m;

    Int operator()(const Int& x, const Int& y) const { return form_value(m, x, y); }
    IntPoly dehomogenized() const { return form_poly(m); }
};

/*
 * Both Tschirnhausen identities relating f_m and F_m(X, 1):
 *
 *   F_m(Z, 1) = Res_X(f_m(X), Z - (2X^2 - 3X + 2m))
 *   f_m(X)    = Res_Z(F_m(Z, 1), X - (2Z^2 - (4m + 9)Z - 6m) / (4m + 27))
 *
 * Each side is a polynomial of degree <= 3 in the outer variable, so the
 * identity is checked by specializing the outer variable at four points and
 * taking univariate resultants.
 */
inline bool tschirnhausen_check(const Int& m) {
    require_nonzero_parameter(m, "tschirnhausen_check");
    const IntPoly f = cubic_poly(m);
    const IntPoly big_f = form_poly(m);
    for (long z = -1; z <= 2; ++z) {
        const IntPoly shift{Int(z - 2 * m), Int(3), Int(-2)};
        if (resultant(f, shift) != big_f.evaluate(Int(z))) return false;
    }
    const Rat c(Int(4 * m + 27));
    const RatPoly rf = to_rat(big_f);
    for (long x = -1; x <= 2; ++x) {
        const RatPoly inv{Rat(Rat(x) + Rat(6 * m) / c), Rat(Rat(4 * m + 9) / c), Rat(Rat(-2) / c)};
        if (resultant(rf, inv) != Rat(f.evaluate(Int(x)))) return false;
    }
    return true;
}

}  // namespace thuecubic

#endif  // THUECUBIC_CUBIC_HPP
