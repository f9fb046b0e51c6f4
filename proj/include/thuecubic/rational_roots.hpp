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

#ifndef THUECUBIC_RATIONAL_ROOTS_HPP
#define THUECUBIC_RATIONAL_ROOTS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "exact.hpp"
#include "polynomial.hpp"

namespace thuecubic {

namespace detail {

// A dyadic rational num / 2^shift.
struct Dyadic {
    Int num;
    unsigned long shift = 0;
};

// Sign of p(num / 2^k), via 2^(k d) p(num / 2^k) = sum c_i num^i 2^(k(d-i)).
inline int sign_at(const IntPoly& p, const Dyadic& at) {
    if (p.is_zero()) return 0;
    const auto& c = p.coefficients();
    Int acc = c.back();
    Int term;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc *= at.num;
        mpz_mul_2exp(term.get_mpz_t(), c[i].get_mpz_t(), at.shift * (c.size() - 1 - i));
        acc += term;
    }
    return sgn(acc);
}

inline std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
    std::vector<IntPoly> seq{p, primitive_part(p.derivative())};
    // Positive rescaling at every step keeps the sign pattern of the chain.
    while (seq.back().degree() > 0) {
        const RatPoly r = divmod(to_rat(seq[seq.size() - 2]), to_rat(seq.back())).second;
        if (r.is_zero()) break;
        seq.push_back(clear_denominators(-r));
    }
    return seq;
}

inline int sign_changes(const std::vector<IntPoly>& seq, const Dyadic& at) {
    int changes = 0;
    int prev = 0;
    for (const auto& s : seq) {
        const int v = sign_at(s, at);
        if (v == 0) continue;
        if (prev != 0 && v != prev) ++changes;
        prev = v;
    }
    return changes;
}

inline Dyadic rescale(const Dyadic& d, unsigned long shift) {
    Dyadic r{d.num, shift};
    mpz_mul_2exp(r.num.get_mpz_t(), d.num.get_mpz_t(), shift - d.shift);
    return r;
}

inline Rat to_rat(const Dyadic& d) {
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, d.shift);
    return make_rat(d.num, den);
}

// Grid points k / lead with lo < k / lead <= hi.
inline std::pair<Int, Int> grid_span(const Dyadic& lo, const Dyadic& hi, const Int& lead) {
    Int a = lo.num * lead;
    Int b = hi.num * lead;
    Int first, last;
    mpz_fdiv_q_2exp(first.get_mpz_t(), a.get_mpz_t(), lo.shift);
    first += 1;  // strictly above lo
    mpz_fdiv_q_2exp(last.get_mpz_t(), b.get_mpz_t(), hi.shift);
    return {first, last};
}

inline bool vanishes_at(const IntPoly& p, const Int& k, const Int& lead) {
    // lead^d p(k / lead) = sum c_i k^i lead^(d-i)
    const auto& c = p.coefficients();
    Int acc = c.back();
    Int lp = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        lp *= lead;
        acc = acc * k + c[i] * lp;
    }
    return acc == 0;
}

struct Interval {
    Dyadic lo;  // open end
    Dyadic hi;  // closed end
    int count;
};

}  // namespace detail

/**
 * The distinct rational roots of p, ascending.
 *
 * X-powers are stripped first (0 is reported when present). Every other
 * rational root k/q of the primitive squarefree part s has q | lc(s), so all
 * of them lie on the grid (1/|lc(s)|) Z. Real roots of s are isolated by a
 * Sturm chain over dyadic intervals inside the Cauchy bound and refined until
 * each interval holds at most one grid point, which is then tested exactly.
 */
inline std::vector<Rat> rational_roots(const IntPoly& p) {
    using namespace detail;
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rat> roots;

    std::size_t low = 0;
    while (p.coeff(low) == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<Int> shifted(p.coefficients().begin() + static_cast<long>(low),
                             p.coefficients().end());
    const IntPoly s = squarefree_part(IntPoly(std::move(shifted)));
    if (s.degree() < 1) return roots;
    if (s.degree() == 1) {
        roots.push_back(make_rat(-s.coeff(0), s.coeff(1)));
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    const Int lead = abs(s.leading());

    // Cauchy: every root satisfies |r| < 1 + max |c_i / c_d| <= 2^e.
    Int maxc = 0;
    for (int i = 0; i < s.degree(); ++i) maxc = std::max<Int>(maxc, abs(s.coeff(static_cast<std::size_t>(i))));
    Int bound = maxc / lead + 2;
    const unsigned long e = mpz_sizeinbase(bound.get_mpz_t(), 2);
    Int big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, e);

    const std::vector<IntPoly> seq = sturm_sequence(s);
    Dyadic lo{Int(-big), 0}, hi{big, 0};
    const int total = sign_changes(seq, lo) - sign_changes(seq, hi);

    std::vector<Interval> work{{lo, hi, total}};
    while (!work.empty()) {
        Interval iv = std::move(work.back());
        work.pop_back();
        if (iv.count == 0) continue;

        auto [first, last] = grid_span(iv.lo, iv.hi, lead);
        if (first > last) continue;  // no candidate rational left in here
        if (first == last) {
            if (vanishes_at(s, first, lead)) roots.push_back(make_rat(first, lead));
            continue;
        }

        const unsigned long sh = iv.lo.shift + 1;
        Dyadic a = rescale(iv.lo, sh), b = rescale(iv.hi, sh);
        Dyadic mid{Int((a.num + b.num) / 2), sh};

        if (iv.count == 1) {
            const int sa = sign_at(s, a);
            const int sb = sign_at(s, b);
            if (sa != 0 && sb != 0 && sa != sb) {
                const int sm = sign_at(s, mid);
                if (sm == 0) {
                    roots.push_back(to_rat(mid));
                } else if (sm == sa) {
                    work.push_back({mid, b, 1});
                } else {
                    work.push_back({a, mid, 1});
                }
                continue;
            }
        }
        const int vm = sign_changes(seq, mid);
        const int left = sign_changes(seq, a) - vm;
        work.push_back({a, mid, left});
        work.push_back({mid, b, iv.count - left});
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

inline std::vector<Rat> rational_roots(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    return rational_roots(clear_denominators(p));
}

}  // namespace thuecubic

#endif  // THUECUBIC_RATIONAL_ROOTS_HPP
