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

#ifndef THUECUBIC_THUE_HPP
#define THUECUBIC_THUE_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cubic.hpp"
#include "exact.hpp"
#include "resolvent.hpp"

namespace thuecubic {

/// Default search height for Thue solutions; every tabulated solution has y <= 365.
inline constexpr long default_y_bound = 1000;

/**
 * A primitive solution of F_m(x, y) = lambda.
 *
 * gcd(x, y) = 1 and either y > 0 or (x, y) = (1, 0); (-1, 0) is never used
 * since (x, y) and (-x, -y) give the same n.
 */
struct PrimitiveSolution {
    Int x;
    Int y;
    Int lambda;

    friend bool operator==(const PrimitiveSolution&, const PrimitiveSolution&) = default;
};

/// Row order used for output: |lambda|, positive lambda first, then y, then x.
inline bool row_order(const PrimitiveSolution& a, const PrimitiveSolution& b) {
    const int c = mpz_cmpabs(a.lambda.get_mpz_t(), b.lambda.get_mpz_t());
    if (c != 0) return c < 0;
    if (sgn(a.lambda) != sgn(b.lambda)) return sgn(a.lambda) > 0;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

inline bool is_normalized(const PrimitiveSolution& s) {
    if (gcd(s.x, s.y) != 1) return false;
    if (s.y < 0) return false;
    if (s.y == 0) return s.x == 1;
    return true;
}

/// phi_m(x, y) = y (x^2 + 9xy + 27y^2 + my^2)(x^3 - mx^2 y - m^2 y^3)
inline Int phi_form(const Int& m, const Int& x, const Int& y) {
    return Int(y * (x * x + 9 * x * y + 27 * y * y + m * y * y) *
               (x * x * x - m * x * x * y - m * m * y * y * y));
}

/// m^3 (4m + 27)^5
inline Int thue_bound_value(const Int& m) { return Int(ipow(m, 3) * ipow(Int(4 * m + 27), 5)); }

/// Positive lambda with lambda^2 | m^3 (4m + 27)^5, ascending.
inline std::vector<Int> lambda_candidates(const Int& m) {
    require_nonzero_parameter(m, "lambda_candidates");
    const Factorization fm = factorize(m);
    const Factorization fk = factorize(Int(4 * m + 27));
    return square_divisor_roots(combine(fm, 3, fk, 5));
}

namespace detail {

// Real roots of x^3 + b x^2 + c x + d, Newton-polished.
inline std::vector<long double> real_cubic_roots(long double b, long double c, long double d) {
    std::vector<long double> roots;
    const long double p = c - b * b / 3;
    const long double q = 2 * b * b * b / 27 - b * c / 3 + d;
    const long double disc = q * q / 4 + p * p * p / 27;
    if (disc > 0) {
        const long double s = std::sqrt(disc);
        roots.push_back(std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s) - b / 3);
    } else if (p == 0) {
        roots.push_back(-b / 3);
    } else {
        const long double r = 2 * std::sqrt(-p / 3);
        long double arg = 3 * q / (p * r);
        arg = std::clamp(arg, -1.0L, 1.0L);
        const long double phi = std::acos(arg);
        constexpr long double two_pi = 6.283185307179586476925286766559L;
        for (int k = 0; k < 3; ++k) roots.push_back(r * std::cos((phi - two_pi * k) / 3) - b / 3);
    }
    for (auto& x : roots) {
        for (int it = 0; it < 3; ++it) {
            const long double f = ((x + b) * x + c) * x + d;
            const long double df = (3 * x + 2 * b) * x + c;
            if (df == 0) break;
            const long double nx = x - f / df;
            if (!std::isfinite(nx)) break;
            x = nx;
        }
    }
    return roots;
}

// Critical points of x^3 + b x^2 + c x + d.
inline std::vector<long double> cubic_critical_points(long double b, long double c) {
    const long double disc = 4 * b * b - 12 * c;
    if (disc < 0) return {};
    const long double s = std::sqrt(disc);
    return {(-2 * b - s) / 6, (-2 * b + s) / 6};
}

// F_m(x, y) in 128-bit arithmetic; callers keep |m| < 2^20, |x| < 2^40, 0 <= y < 2^20.
inline __int128 form_value_i128(std::int64_t m, std::int64_t x, std::int64_t y) {
    const __int128 X = x, Y = y, M = m;
    return X * X * X - 2 * M * X * X * Y - 9 * M * X * Y * Y - M * (2 * M + 27) * Y * Y * Y;
}

inline long double to_ld(const Int& v) { return static_cast<long double>(v.get_d()); }

}  // namespace detail

/**
 * Primitive solutions of F_m(x, y) = lambda with 0 <= y <= y_bound, sorted
 * by (y, x).
 *
 * y = 0 contributes (1, 0) when lambda = 1. For each y >= 1 the cubic in x
 * is solved in long double and integers within 2 of every real root (and of
 * every critical point) are checked exactly.
 */
inline std::vector<PrimitiveSolution> solve_thue(const Int& m, const Int& lambda, long y_bound) {
    require_nonzero_parameter(m, "solve_thue");
    if (lambda == 0) throw std::invalid_argument("solve_thue: lambda must be nonzero");
    if (y_bound < 0) throw std::invalid_argument("solve_thue: negative y bound");
    std::vector<PrimitiveSolution> out;

    if (auto t = integer_cube_root(lambda); t && *t == 1) out.push_back({Int(1), Int(0), lambda});

    const bool small_m = abs(m) < (1L << 20) && y_bound < (1L << 20);
    const bool small_lambda = lambda.fits_slong_p();
    const std::int64_t m64 = small_m ? m.get_si() : 0;
    const std::int64_t l64 = small_lambda ? lambda.get_si() : 0;
    const long double mf = detail::to_ld(m);
    const long double lf = detail::to_ld(lambda);

    std::vector<std::int64_t> cand;
    for (long y = 1; y <= y_bound; ++y) {
        const long double yf = static_cast<long double>(y);
        const long double b = -2 * mf * yf;
        const long double c = -9 * mf * yf * yf;
        const long double d = -mf * (2 * mf + 27) * yf * yf * yf - lf;
        cand.clear();
        auto add_window = [&](long double r) {
            if (!std::isfinite(r) || std::fabs(r) > 9.0e15L) return;
            const std::int64_t k = std::llround(r);
            for (std::int64_t dx = -2; dx <= 2; ++dx) cand.push_back(k + dx);
        };
        for (long double r : detail::real_cubic_roots(b, c, d)) add_window(r);
        for (long double r : detail::cubic_critical_points(b, c)) add_window(r);
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

        const Int yi(y);
        for (std::int64_t x : cand) {
            bool hit;
            if (small_m && small_lambda && x > -(1LL << 40) && x < (1LL << 40))
                hit = detail::form_value_i128(m64, x, y) == static_cast<__int128>(l64);
            else
                hit = form_value(m, Int(static_cast<long>(x)), yi) == lambda;
            if (!hit) continue;
            const Int xi(static_cast<long>(x));
            if (gcd(xi, yi) != 1) continue;
            out.push_back({xi, yi, lambda});
        }
    }
    return out;
}

/**
 * n attached to a solution:
 *   n = m + m(4m + 27) phi_m(x, y) / F_m(x, y)^2,
 * cross-checked against n = m(x^2 + 9xy - 3my^2)^3 / F_m(x, y)^2.
 */
inline Rat n_from_solution(const Int& m, const PrimitiveSolution& s) {
    const Int lambda = form_value(m, s.x, s.y);
    if (lambda != s.lambda) throw std::invalid_argument("n_from_solution: F_m(x, y) != lambda");
    const Int l2 = lambda * lambda;
    const Rat n = Rat(m) + make_rat(Int(m * (4 * m + 27) * phi_form(m, s.x, s.y)), l2);
    const Rat alt = make_rat(Int(m * ipow(Int(s.x * s.x + 9 * s.x * s.y - 3 * m * s.y * s.y), 3)), l2);
    if (n != alt) throw std::logic_error("n_from_solution: the two closed forms disagree");
    return n;
}

/**
 * Solutions mapping to n = m: (1, 0) always; for cyclic f_m with
 * m = -b^2 - b - 7 also (b - 4, 1) and (-b - 5, 1); for m = -8 also (-4, 1).
 */
inline std::vector<PrimitiveSolution> self_pair_solutions(const Int& m) {
    const GaloisClass g = classify(m);
    std::vector<PrimitiveSolution> out{{Int(1), Int(0), Int(1)}};
    auto add = [&](const Int& x) {
        out.push_back({x, Int(1), form_value(m, x, Int(1))});
    };
    if (g.tag == GaloisGroup::C3) {
        const Int& b = *g.c3_witness;
        add(Int(b - 4));
        add(Int(-b - 5));
    } else if (g.tag == GaloisGroup::C2) {
        add(Int(-4));
    }
    for (const auto& s : out)
        if (n_from_solution(m, s) != Rat(m))
            throw std::logic_error("self_pair_solutions: solution does not map to m");
    std::sort(out.begin(), out.end(), row_order);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration of field overlaps

enum class Exclusion { n_zero, n_critical };

inline const char* to_string(Exclusion e) {
    return e == Exclusion::n_zero ? "n_zero" : "n_critical";
}

struct OverlapRecord {
    Int m;
    Rat n;
    PrimitiveSolution solution;
    bool n_integral = false;
    std::optional<Exclusion> excluded;

    friend bool operator==(const OverlapRecord&, const OverlapRecord&) = default;
};

namespace detail {

inline std::vector<PrimitiveSolution> solve_all_lambdas(const Int& m, const std::vector<Int>& lambdas,
                                                         long y_bound, unsigned threads) {
    std::vector<Int> signed_lambdas;
    for (const auto& l : lambdas) {
        signed_lambdas.push_back(l);
        signed_lambdas.push_back(-l);
    }
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(signed_lambdas.size())));
    std::vector<std::vector<PrimitiveSolution>> shards(threads);
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < signed_lambdas.size(); i += threads) {
            auto sols = solve_thue(m, signed_lambdas[i], y_bound);
            shards[w].insert(shards[w].end(), sols.begin(), sols.end());
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<PrimitiveSolution> all;
    for (auto& s : shards) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end(), row_order);
    return all;
}

}  // namespace detail

/**
 * Every solution with y <= y_bound over all admissible +-lambda, each mapped
 * to its n. n = 0 and n = -27/4 are flagged as excluded, and each integral
 * n != m is confirmed with the resolvent test.
 */
inline std::vector<OverlapRecord> enumerate_overlaps(const Int& m, long y_bound = default_y_bound,
                                                     unsigned threads = 1) {
    require_nonzero_parameter(m, "enumerate_overlaps");
    const auto sols = detail::solve_all_lambdas(m, lambda_candidates(m), y_bound, threads);
    std::vector<OverlapRecord> out;
    std::map<Int, bool> confirmed;
    for (const auto& s : sols) {
        OverlapRecord r{m, n_from_solution(m, s), s, false, std::nullopt};
        r.n_integral = is_integral(r.n);
        if (r.n == 0) {
            if (!special_n_zero(m)) throw std::logic_error("enumerate_overlaps: unexpected n = 0");
            r.excluded = Exclusion::n_zero;
        } else if (r.n == critical_n()) {
            if (!special_n_critical(m)) throw std::logic_error("enumerate_overlaps: unexpected n = -27/4");
            r.excluded = Exclusion::n_critical;
        } else if (r.n_integral && r.n.get_num() != m) {
            const Int n = r.n.get_num();
            auto it = confirmed.find(n);
            if (it == confirmed.end()) it = confirmed.emplace(n, isom_test(m, n).same_field).first;
            if (!it->second) throw std::logic_error("enumerate_overlaps: resolvent test rejects n");
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// Distinct integral, non-excluded n among the records (m itself included).
inline std::vector<Int> integer_partners(const std::vector<OverlapRecord>& records) {
    std::vector<Int> out;
    for (const auto& r : records)
        if (r.n_integral && !r.excluded) out.push_back(r.n.get_num());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// #{integral n} <= N / mu, N the number of primitive solutions found.
inline bool count_bound_check(const Int& m, long y_bound = default_y_bound) {
    const auto records = enumerate_overlaps(m, y_bound);
    const auto partners = integer_partners(records);
    return partners.size() * static_cast<std::size_t>(classify(m).mu()) <= records.size();
}

}  // namespace thuecubic

#endif  // THUECUBIC_THUE_HPP
