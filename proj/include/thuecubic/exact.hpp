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

#ifndef THUECUBIC_EXACT_HPP
#define THUECUBIC_EXACT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thuecubic {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Int parse_int(const std::string& s) {
    Int v;
    if (s.empty() || v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

inline Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rpow(const Rat& base, unsigned long e) {
    Rat r(1);
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& v) {
    if (d == 0) return v == 0;
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline int sign(const Int& v) { return sgn(v); }

// ---------------------------------------------------------------------------
// Factorization

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Sign and prime powers of a nonzero integer. Primes strictly increasing.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    Int value() const {
        Int v = 1;
        for (const auto& f : factors) v *= ipow(f.prime, f.exponent);
        return sign < 0 ? Int(-v) : v;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline bool is_probable_prime(const Int& n) {
    // GMP runs BPSW first, which is exact below 2^64.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, or n itself if every polynomial tried cycles out.
inline Int pollard_brent(const Int& n) {
    for (unsigned long c = 1; c < 64; ++c) {
        Int y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long batch = 128;
        auto step = [&](Int& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                const unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    step(y);
                    Int diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
    return n;
}

inline void factor_cofactor(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int sq;
    mpz_sqrt(sq.get_mpz_t(), n.get_mpz_t());
    if (sq * sq == n) {
        factor_cofactor(sq, out);
        factor_cofactor(sq, out);
        return;
    }
    const Int d = pollard_brent(n);
    if (d == n) throw std::runtime_error("factorize: rho failed on " + n.get_str());
    factor_cofactor(d, out);
    factor_cofactor(Int(n / d), out);
}

}  // namespace detail

/// Trial division up to 10^6, then Brent-rho on what remains.
inline Factorization factorize(const Int& v) {
    if (v == 0) throw std::invalid_argument("factorize: zero has no factorization");
    Factorization f;
    f.sign = v < 0 ? -1 : 1;
    Int n = abs(v);
    std::map<Int, unsigned> acc;

    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) acc[Int(p)] += e;
    };

    constexpr unsigned long trial_limit = 1000000;
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (unsigned long p = 5; p <= trial_limit; p += 6) {
        if (Int(p) * p > n) break;
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        if (n < Int(trial_limit) * trial_limit)
            ++acc[n];
        else
            detail::factor_cofactor(n, acc);
    }
    for (auto& [p, e] : acc) f.factors.push_back({p, e});
    return f;
}

/// Product of two factorizations, each raised to a power.
inline Factorization combine(const Factorization& a, unsigned ea, const Factorization& b,
                             unsigned eb) {
    std::map<Int, unsigned> acc;
    for (const auto& f : a.factors) acc[f.prime] += f.exponent * ea;
    for (const auto& f : b.factors) acc[f.prime] += f.exponent * eb;
    Factorization out;
    const bool neg_a = a.sign < 0 && (ea % 2 == 1);
    const bool neg_b = b.sign < 0 && (eb % 2 == 1);
    out.sign = (neg_a != neg_b) ? -1 : 1;
    for (auto& [p, e] : acc)
        if (e) out.factors.push_back({p, e});
    return out;
}

/// Every positive lambda with lambda^2 dividing |D|, ascending.
inline std::vector<Int> square_divisor_roots(const Factorization& f) {
    std::vector<Int> out{Int(1)};
    for (const auto& pe : f.factors) {
        const unsigned half = pe.exponent / 2;
        const std::size_t base = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= half; ++k) {
            pk *= pe.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Root t >= 0 with t^2 = v, if v is a perfect square.
inline std::optional<Int> perfect_square_root(const Int& v) {
    if (v < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& v) { return perfect_square_root(v).has_value(); }

struct SquarefreeDecomposition {
    Int squarefree;  // carries the sign of v
    Int root;        // v = squarefree * root^2, root > 0
};

inline SquarefreeDecomposition squarefree_decompose(const Int& v) {
    if (v == 0) throw std::invalid_argument("squarefree_part: zero");
    const Factorization f = factorize(v);
    SquarefreeDecomposition d{Int(f.sign), Int(1)};
    for (const auto& pe : f.factors) {
        if (pe.exponent % 2) d.squarefree *= pe.prime;
        d.root *= ipow(pe.prime, pe.exponent / 2);
    }
    return d;
}

inline Int squarefree_part(const Int& v) { return squarefree_decompose(v).squarefree; }

inline std::optional<Int> integer_cube_root(const Int& v) {
    Int r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3) != 0) return r;
    return std::nullopt;
}

}  // namespace thuecubic

#endif  // THUECUBIC_EXACT_HPP
