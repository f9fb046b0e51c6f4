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

#ifndef THUECUBIC_EMBEDDING_HPP
#define THUECUBIC_EMBEDDING_HPP

#include <array>
#include <stdexcept>

#include "cubic.hpp"
#include "exact.hpp"

namespace thuecubic {

/// a0 + a1 t + a2 t^2 in Q[t] / (t^3 + m t + m).
class CubicFieldElement {
public:
    CubicFieldElement(Int m, std::array<Rat, 3> c) : m_(std::move(m)), c_(std::move(c)) {}

    static CubicFieldElement generator(const Int& m) {
        return {m, {Rat(0), Rat(1), Rat(0)}};
    }

    const Int& modulus_parameter() const { return m_; }
    const std::array<Rat, 3>& coefficients() const { return c_; }

    friend CubicFieldElement operator+(const CubicFieldElement& a, const CubicFieldElement& b) {
        return {a.m_, {Rat(a.c_[0] + b.c_[0]), Rat(a.c_[1] + b.c_[1]), Rat(a.c_[2] + b.c_[2])}};
    }

    friend CubicFieldElement operator*(const Rat& s, const CubicFieldElement& a) {
        return {a.m_, {Rat(s * a.c_[0]), Rat(s * a.c_[1]), Rat(s * a.c_[2])}};
    }

    friend CubicFieldElement operator*(const CubicFieldElement& a, const CubicFieldElement& b) {
        std::array<Rat, 5> p{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) p[i + j] += a.c_[i] * b.c_[j];
        const Rat m(a.m_);
        // t^4 = -m t^2 - m t, t^3 = -m t - m
        p[2] -= m * p[4];
        p[1] -= m * p[4];
        p[1] -= m * p[3];
        p[0] -= m * p[3];
        return {a.m_, {p[0], p[1], p[2]}};
    }

    friend bool operator==(const CubicFieldElement& a, const CubicFieldElement& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }

private:
    Int m_;
    std::array<Rat, 3> c_;
};

/**
 * The embedding attached to a projective point (x : y) with F_m(x, y) != 0:
 * a root e of f_m goes to
 *
 *   (x^2 + 9xy - 3m y^2) (3y e^2 + x e + 2m y) / F_m(x, y),
 *
 * a root of f_n with n = m(x^2 + 9xy - 3my^2)^3 / F_m(x, y)^2. (1 : 0) is the
 * identity. `e` may live in any cubic field; only m enters the formula.
 */
inline CubicFieldElement apply_root_map(const Int& m, const Int& x, const Int& y,
                                        const CubicFieldElement& e) {
    const Int lambda = form_value(m, x, y);
    if (lambda == 0) throw std::domain_error("apply_root_map: F_m(x, y) = 0");
    const Rat scale = make_rat(Int(x * x + 9 * x * y - 3 * m * y * y), lambda);
    const CubicFieldElement one{e.modulus_parameter(), {Rat(1), Rat(0), Rat(0)}};
    const CubicFieldElement inner =
        Rat(3 * y) * (e * e) + Rat(x) * e + Rat(2 * m * y) * one;
    return scale * inner;
}

/**
 * True when the map attached to (x, y) for (m -> n) followed by the map
 * attached to (xr, yr) for (n -> m) fixes a root of f_m, i.e. the two
 * solutions describe mutually inverse identifications of the cubic fields.
 */
inline bool inverse_root_maps(const Int& m, const Int& x, const Int& y, const Int& n,
                              const Int& xr, const Int& yr) {
    const CubicFieldElement t = CubicFieldElement::generator(m);
    const CubicFieldElement there = apply_root_map(m, x, y, t);
    const CubicFieldElement back = apply_root_map(n, xr, yr, there);
    return back == t;
}

}  // namespace thuecubic

#endif  // THUECUBIC_EMBEDDING_HPP
