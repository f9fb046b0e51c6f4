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

#ifndef THUECUBIC_SCAN_HPP
#define THUECUBIC_SCAN_HPP

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "embedding.hpp"
#include "exact.hpp"
#include "resolvent.hpp"
#include "thue.hpp"

namespace thuecubic {

struct IntRange {
    long lo = 0;
    long hi = 0;

    bool contains(long v) const { return lo <= v && v <= hi; }
    bool empty() const { return lo > hi; }
};

/// Which side of m the partner n must lie on.
enum class PartnerSide { above, below, any };

struct ScanConfig {
    IntRange m_range;
    IntRange n_range;
    PartnerSide side = PartnerSide::any;
    unsigned threads = 1;

    void validate() const {
        if (m_range.empty() || n_range.empty()) throw std::invalid_argument("scan: empty range");
    }

    /// -6 <= m < n <= limit: f_m totally imaginary.
    static ScanConfig imaginary(long limit = 200000) {
        return {{-6, limit}, {-6, limit}, PartnerSide::above, 1};
    }

    /// -limit <= n < m <= -7: f_m totally real.
    static ScanConfig real(long limit = 200000) {
        return {{-limit, -7}, {-limit, -7}, PartnerSide::below, 1};
    }
};

/**
 * Every n in `range`, n != 0, n != m, with (4m + 27)(4n + 27) a square.
 *
 * Writing -(4m + 27) = s a^2 with s squarefree, these are exactly the n with
 * -(4n + 27) = s b^2. Since 4m + 27 is odd, s = 1 (mod 4) and b is odd.
 */
inline std::vector<long> square_condition_partners(long m, IntRange range) {
    if (m == 0) throw std::invalid_argument("square_condition_partners: m = 0");
    std::vector<long> out;
    if (range.empty()) return out;
    const long s = squarefree_part(Int(-(4 * m + 27))).get_si();
    // n = -(s b^2 + 27) / 4 for odd b >= 1
    for (long b = 1;; b += 2) {
        const __int128 sb2 = static_cast<__int128>(s) * b * b;
        const __int128 num = -(sb2 + 27);
        if (num % 4 != 0) throw std::logic_error("square_condition_partners: parity");
        const __int128 n = num / 4;
        if (s > 0 && n < range.lo) break;
        if (s < 0 && n > range.hi) break;
        if (n >= range.lo && n <= range.hi && n != 0 && n != m) out.push_back(static_cast<long>(n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Necessary condition for R_{m,n} to have a rational root, checked modulo a
 * set of small primes. A rational root x/q has q | (m - n); modulo any p not
 * dividing m - n it reduces to a root u of
 *   m(u^2 + 9u - 3m)^3 = n F_m(u, 1)^2  (mod p),
 * so n mod p must be one of the values this relation allows. The residue sets
 * depend on m only and are built once.
 */
class ResidueSieve {
public:
    static constexpr std::array<int, 40> primes{
        2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,  47,  53,  59,  61,  67,  71,
        73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

    explicit ResidueSieve(long m) : m_(m) {
        for (std::size_t i = 0; i < primes.size(); ++i) build(i);
    }

    bool may_have_rational_root(long n) const {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (full_[i]) continue;
            const long p = primes[i];
            if ((m_ - n) % p == 0) continue;
            if (!allowed_[i][static_cast<std::size_t>(mod(n, p))]) return false;
        }
        return true;
    }

private:
    static long mod(long v, long p) {
        const long r = v % p;
        return r < 0 ? r + p : r;
    }

    static long inverse(long a, long p) {
        long r = 1, e = p - 2, b = a;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    void build(std::size_t i) {
        const long p = primes[i];
        const long m = mod(m_, p);
        std::bitset<256> mask;
        bool full = false;
        for (long u = 0; u < p; ++u) {
            const long quad = mod(u * u + 9 * u - 3 * m, p);
            const long a = m * (quad * quad % p * quad % p) % p;
            const long f = mod(u * u % p * u - 2 * m * u % p * u - 9 * m * u - m * mod(2 * m + 27, p), p);
            const long bsq = f * f % p;
            if (bsq == 0) {
                if (a == 0) full = true;
                continue;
            }
            mask.set(static_cast<std::size_t>(a * inverse(bsq, p) % p));
        }
        allowed_[i] = mask;
        full_[i] = full;
    }

    long m_;
    std::array<std::bitset<256>, primes.size()> allowed_{};
    std::array<bool, primes.size()> full_{};
};

/// One field coincidence with one matched pair of solutions.
struct ScanRow {
    Int m;
    Int n;
    PrimitiveSolution forward;   // F_m(x, y) = lambda
    PrimitiveSolution backward;  // F_n(x', y') = lambda'

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

inline bool scan_row_order(const ScanRow& a, const ScanRow& b) {
    return std::tie(a.m, a.n, a.forward.y, a.forward.x) < std::tie(b.m, b.n, b.forward.y, b.forward.x);
}

inline PrimitiveSolution solution_from_root(const Int& m, const Rat& u) {
    PrimitiveSolution s{u.get_num(), u.get_den(), Int(0)};
    s.lambda = form_value(m, s.x, s.y);
    return s;
}

/**
 * For m != n with coinciding fields: the solutions of both orientations,
 * each forward solution matched with the backward one describing the inverse
 * identification of the fields. Empty when the fields differ.
 */
inline std::vector<ScanRow> paired_solutions(const Int& m, const Int& n) {
    if (m == n) throw std::invalid_argument("paired_solutions: m == n");
    const auto fwd = rational_roots(resolvent_poly(m, n));
    if (fwd.empty()) return {};
    const auto bwd = rational_roots(resolvent_poly(n, m));
    if (bwd.size() != fwd.size()) throw std::logic_error("paired_solutions: orientation root counts differ");
    std::vector<ScanRow> rows;
    std::vector<bool> used(bwd.size(), false);
    for (const auto& u : fwd) {
        const PrimitiveSolution s = solution_from_root(m, u);
        bool matched = false;
        for (std::size_t j = 0; j < bwd.size(); ++j) {
            if (used[j]) continue;
            const PrimitiveSolution t = solution_from_root(n, bwd[j]);
            if (inverse_root_maps(m, s.x, s.y, n, t.x, t.y)) {
                rows.push_back({m, n, s, t});
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) throw std::logic_error("paired_solutions: no inverse solution found");
    }
    std::sort(rows.begin(), rows.end(), scan_row_order);
    return rows;
}

struct ScanStats {
    std::uint64_t candidates = 0;
    std::uint64_t sieved_out = 0;
    std::uint64_t resolvent_tests = 0;
};

namespace detail {

inline bool side_ok(PartnerSide side, long m, long n) {
    switch (side) {
        case PartnerSide::above: return n > m;
        case PartnerSide::below: return n < m;
        case PartnerSide::any: return n != m;
    }
    return false;
}

inline void scan_parameter(long m, const ScanConfig& cfg, std::vector<ScanRow>& rows, ScanStats& st) {
    IntRange nr = cfg.n_range;
    if (cfg.side == PartnerSide::above) nr.lo = std::max(nr.lo, m + 1);
    if (cfg.side == PartnerSide::below) nr.hi = std::min(nr.hi, m - 1);
    const auto partners = square_condition_partners(m, nr);
    if (partners.empty()) return;
    const ResidueSieve sieve(m);
    for (long n : partners) {
        if (!side_ok(cfg.side, m, n)) continue;
        ++st.candidates;
        if (!sieve.may_have_rational_root(n)) {
            ++st.sieved_out;
            continue;
        }
        ++st.resolvent_tests;
        auto found = paired_solutions(Int(m), Int(n));
        rows.insert(rows.end(), found.begin(), found.end());
    }
}

}  // namespace detail

/**
 * All (m, n) in the configured ranges with Spl f_m = Spl f_n, one row per
 * rational root of R_{m,n}. Work is sharded by m across threads and merged
 * in (m, n, y, x) order, so output does not depend on the thread count.
 */
inline std::vector<ScanRow> scan(const ScanConfig& cfg, ScanStats* stats = nullptr) {
    cfg.validate();
    const unsigned threads = std::max(1u, cfg.threads);
    std::vector<std::vector<ScanRow>> shards(threads);
    std::vector<ScanStats> shard_stats(threads);
    auto work = [&](unsigned w) {
        long idx = 0;
        for (long m = cfg.m_range.lo; m <= cfg.m_range.hi; ++m, ++idx) {
            if (m == 0 || idx % static_cast<long>(threads) != static_cast<long>(w)) continue;
            detail::scan_parameter(m, cfg, shards[w], shard_stats[w]);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<ScanRow> rows;
    ScanStats total;
    for (unsigned w = 0; w < threads; ++w) {
        rows.insert(rows.end(), shards[w].begin(), shards[w].end());
        total.candidates += shard_stats[w].candidates;
        total.sieved_out += shard_stats[w].sieved_out;
        total.resolvent_tests += shard_stats[w].resolvent_tests;
    }
    std::sort(rows.begin(), rows.end(), scan_row_order);
    if (stats) *stats = total;
    return rows;
}

}  // namespace thuecubic

#endif  // THUECUBIC_SCAN_HPP
