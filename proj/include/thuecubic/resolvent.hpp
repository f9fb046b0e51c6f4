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

#ifndef THUECUBIC_RESOLVENT_HPP
#define THUECUBIC_RESOLVENT_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "exact.hpp"
#include "polynomial.hpp"
#include "rational_roots.hpp"

namespace thuecubic {

/// m(X^2 + 9X - 3m)^3 - n F_m(X, 1)^2, straight from the definition.
inline RatPoly resolvent_difference_form(const Int& m, const Rat& n) {
    const RatPoly quad{Rat(-3 * m), Rat(9), Rat(1)};
    const RatPoly form = to_rat(form_poly(m));
    return quad.pow(3) * Rat(m) - form.pow(2) * n;
}

/// The same sextic from its expanded coefficient formulas.
inline RatPoly resolvent_expanded_form(const Int& m, const Rat& n) {
    const Rat M(m);
    const Rat M2 = M * M;
    std::vector<Rat> c(7);
    c[6] = M - n;
    c[5] = M * (4 * n + 27);
    c[4] = -M * (4 * M * n + 9 * M - 18 * n - 243);
    c[3] = -M * (32 * M * n + 162 * M - 54 * n - 729);
    c[2] = -M2 * (8 * M * n - 27 * M + 189 * n + 729);
    c[1] = -9 * M2 * (4 * M * n - 27 * M + 54 * n);
    c[0] = -M2 * (4 * M2 * n + 27 * M2 + 108 * M * n + 729 * n);
    return RatPoly(std::move(c));
}

/// R_{m,n}. n is rational only to reach the special value -27/4.
struct ResolventSextic {
    Int m;
    Rat n;
    RatPoly coeffs;

    int degree() const { return coeffs.degree(); }

    IntPoly integral() const {
        for (const auto& c : coeffs.coefficients())
            if (!is_integral(c)) throw std::domain_error("resolvent has non-integral coefficients");
        std::vector<Int> v;
        for (const auto& c : coeffs.coefficients()) v.push_back(c.get_num());
        return IntPoly(std::move(v));
    }
};

inline ResolventSextic build_resolvent(const Int& m, const Rat& n) {
    require_nonzero_parameter(m, "build_resolvent");
    RatPoly diff = resolvent_difference_form(m, n);
    if (!(diff == resolvent_expanded_form(m, n)))
        throw std::logic_error("resolvent: expanded form disagrees with difference form");
    return {m, n, std::move(diff)};
}

inline IntPoly resolvent_poly(const Int& m, const Int& n) {
    return build_resolvent(m, Rat(n)).integral();
}

/// Closed form of disc(R_{m,n}): m^10 (4m+27)^15 n^4 (4n+27)^3.
inline Int resolvent_discriminant_closed_form(const Int& m, const Int& n) {
    return Int(ipow(m, 10) * ipow(Int(4 * m + 27), 15) * ipow(n, 4) * ipow(Int(4 * n + 27), 3));
}

inline bool resolvent_discriminant_check(const Int& m, const Int& n) {
    if (m == n) throw std::invalid_argument("resolvent_discriminant_check: m == n");
    if (m == 0 || n == 0) throw std::invalid_argument("resolvent_discriminant_check: zero parameter");
    return discriminant(resolvent_poly(m, n)) == resolvent_discriminant_closed_form(m, n);
}

// ---------------------------------------------------------------------------
// Decomposition types

using Partition = std::vector<int>;

inline std::string to_string(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

inline int count_linear(const Partition& p) {
    return static_cast<int>(std::count(p.begin(), p.end(), 1));
}

enum class Intersection { trivial, quadratic, contains_Ln, equal };

inline const char* to_string(Intersection i) {
    switch (i) {
        case Intersection::trivial: return "trivial";
        case Intersection::quadratic: return "quadratic";
        case Intersection::contains_Ln: return "contains_Ln";
        case Intersection::equal: return "equal";
    }
    return "?";
}

struct FieldComparison {
    Partition dt;
    std::string joint_group;
    Intersection intersection;
};

/// Quadratic subfield generator Q(sqrt d), d squarefree; 1 for cyclic cubics.
inline Int quadratic_subfield(const Int& m) { return squarefree_part(Int(-(4 * m + 27))); }

/**
 * Decomposition type of R_{m,n}, the group of f_m f_n and the intersection
 * of the two splitting fields, from the group pair and two field facts.
 * Inputs are ordered internally so that #G_m >= #G_n; the root set of
 * R_{n,m} is the inverse of that of R_{m,n}, so the lookup is symmetric.
 */
inline FieldComparison compare_fields(GaloisGroup gm, GaloisGroup gn, bool same_field,
                                      bool same_quadratic, Int quad_m, Int quad_n) {
    if (group_order(gm) < group_order(gn)) {
        std::swap(gm, gn);
        std::swap(quad_m, quad_n);
    }
    using G = GaloisGroup;
    using I = Intersection;
    if (gm == G::S3 && gn == G::S3) {
        if (same_field) return {{3, 2, 1}, "S3", I::equal};
        if (same_quadratic) return {{3, 3}, "(C3xC3):C2", I::quadratic};
        return {{6}, "S3xS3", I::trivial};
    }
    if (gm == G::S3 && gn == G::C3) return {{6}, "S3xC3", I::trivial};
    if (gm == G::S3 && gn == G::C2) {
        // L_n = Q(sqrt 5) lies in L_m iff the quadratic subfields agree.
        if (quad_m == quad_n) return {{3, 3}, "S3", I::contains_Ln};
        return {{6}, "S3xC2", I::trivial};
    }
    if (gm == G::C3 && gn == G::C3) {
        if (same_field) return {{3, 1, 1, 1}, "C3", I::equal};
        return {{3, 3}, "C3xC3", I::trivial};
    }
    if (gm == G::C3 && gn == G::C2) return {{6}, "C6", I::trivial};
    // C2 x C2 never arises for distinct nonzero integers; kept for completeness.
    if (same_field) return {{2, 2, 1, 1}, "C2", I::equal};
    return {{4, 2}, "C2xC2", I::trivial};
}

/// Decomposition type of the quintic R_{m,m} by group.
inline Partition self_resolvent_dt(GaloisGroup g) {
    switch (g) {
        case GaloisGroup::S3: return {3, 2};
        case GaloisGroup::C3: return {3, 1, 1};
        case GaloisGroup::C2: return {2, 2, 1};
    }
    return {};
}

struct IsomReport {
    Int m;
    Int n;
    bool same_field = false;
    std::vector<Rat> roots;
    Partition dt;
    GaloisClass group_m;
    GaloisClass group_n;
    std::string joint_group;
    Intersection intersection = Intersection::trivial;
};

/**
 * Decides Spl f_m = Spl f_n by looking for a rational root of R_{m,n}.
 * For m = n the resolvent drops to the quintic R_{m,m} and the answer is
 * trivially yes.
 */
inline IsomReport isom_test(const Int& m, const Int& n) {
    if (m == 0 || n == 0) throw std::invalid_argument("isom_test: m and n must be nonzero");
    IsomReport r;
    r.m = m;
    r.n = n;
    r.group_m = classify(m);
    r.group_n = classify(n);
    r.roots = rational_roots(resolvent_poly(m, n));

    if (m == n) {
        r.same_field = true;
        r.dt = self_resolvent_dt(r.group_m.tag);
        r.joint_group = to_string(r.group_m.tag);
        r.intersection = Intersection::equal;
        if (static_cast<int>(r.roots.size()) != count_linear(r.dt))
            throw std::logic_error("isom_test: quintic root count disagrees with its decomposition type");
        return r;
    }

    r.same_field = !r.roots.empty();
    const Int qm = quadratic_subfield(m);
    const Int qn = quadratic_subfield(n);
    const FieldComparison cmp =
        compare_fields(r.group_m.tag, r.group_n.tag, r.same_field, qm == qn, qm, qn);
    r.dt = cmp.dt;
    r.joint_group = cmp.joint_group;
    r.intersection = cmp.intersection;
    if (static_cast<int>(r.roots.size()) != count_linear(r.dt))
        throw std::logic_error("isom_test: root count disagrees with decomposition type");
    return r;
}

// ---------------------------------------------------------------------------
// The degenerate resolvents

/**
 * X^6 R_{m,m}(1/X) against -m(4m+27) X ((m+27)X^2 + 9X + 1)(m^2 X^3 + mX - 1).
 */
inline bool self_resolvent_factor_check(const Int& m) {
    require_nonzero_parameter(m, "self_resolvent_factor_check");
    const IntPoly reversed = resolvent_poly(m, m).reverse(6);
    const IntPoly quad{Int(1), Int(9), Int(m + 27)};
    const IntPoly cub{Int(-1), m, Int(0), Int(m * m)};
    const IntPoly product = IntPoly::monomial(Int(-m * (4 * m + 27)), 1) * quad * cub;
    return reversed == product;
}

/// DT of R_{m,m} computed from its explicit factors rather than by lookup.
inline Partition self_resolvent_dt_from_factors(const Int& m) {
    require_nonzero_parameter(m, "self_resolvent_dt_from_factors");
    Partition dt;
    // (m+27)X^2 + 9X + 1 has discriminant -(4m+27).
    if (is_perfect_square(Int(-(4 * m + 27)))) {
        dt.push_back(1);
        dt.push_back(1);
    } else {
        dt.push_back(2);
    }
    const IntPoly cub{Int(-1), m, Int(0), Int(m * m)};
    if (rational_roots(cub).empty()) {
        dt.push_back(3);
    } else {
        // m^2 X^3 + mX - 1 with a rational root: the cofactor is an
        // irreducible quadratic unless all three roots are rational.
        const auto roots = rational_roots(cub);
        if (roots.size() == 1) {
            dt.push_back(2);
            dt.push_back(1);
        } else {
            dt.insert(dt.end(), {1, 1, 1});
        }
    }
    std::sort(dt.rbegin(), dt.rend());
    return dt;
}

/// c with m = 3c(c + 3), preferring c >= -1; absent if none exists.
inline std::optional<Int> special_n_zero(const Int& m) {
    require_nonzero_parameter(m, "special_n_zero");
    if (!divides(Int(3), m)) return std::nullopt;
    // c^2 + 3c - m/3 = 0
    const auto t = perfect_square_root(Int(9 + 4 * (m / 3)));
    if (!t) return std::nullopt;
    return Int((*t - 3) / 2);
}

/// R_{m,-27/4} has a rational root only for m = -8.
inline bool special_n_critical(const Int& m) {
    require_nonzero_parameter(m, "special_n_critical");
    return m == -8;
}

/// The value -27/4 at which 4n + 27 vanishes.
inline Rat critical_n() { return make_rat(Int(-27), Int(4)); }

/**
 * Integer pairs making the constant term of R_{m,n} vanish, so that u = 0 is
 * a root: 4m^2 n + 27m^2 + 108mn + 729n = 0, i.e. n = -27m^2 / (2m + 27)^2,
 * which forces (2m + 27) | 243.
 */
inline std::vector<std::pair<Int, Int>> constant_term_pairs() {
    std::vector<std::pair<Int, Int>> out;
    for (long d : {1L, 3L, 9L, 27L, 81L, 243L}) {
        for (long s : {1L, -1L}) {
            const Int den(s * d);
            const Int m = (den - 27) / 2;
            if (m == 0) continue;
            const Rat n = make_rat(Int(-27 * m * m), Int(den * den));
            if (!is_integral(n) || n.get_num() == m) continue;
            out.emplace_back(m, n.get_num());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace thuecubic

#endif  // THUECUBIC_RESOLVENT_HPP
