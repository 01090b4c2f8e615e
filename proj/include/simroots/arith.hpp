#pragma once

// 64-bit exact modular and multiplicative arithmetic: the substrate for
// everything else in the library. All moduli are capped at 2^62 so that
// products always fit in unsigned 128-bit intermediates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simroots {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 max_modulus = u64{1} << 62;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    if (m == 0) throw std::domain_error("mul_mod: modulus is zero");
    return static_cast<u64>((u128{a} * b) % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
    if (m == 0) throw std::domain_error("add_mod: modulus is zero");
    a %= m;
    b %= m;
    u64 s = a + b;           // a,b < 2^62, no wrap
    return s >= m ? s - m : s;
}

// Square-and-multiply; pow_mod(a, 0, m) == 1 mod m.
inline u64 pow_mod(u64 a, u64 e, u64 m) {
    if (m == 0) throw std::domain_error("pow_mod: modulus is zero");
    u64 r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1) r = static_cast<u64>((u128{r} * a) % m);
        a = static_cast<u64>((u128{a} * a) % m);
        e >>= 1;
    }
    return r;
}

namespace detail {

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

}  // namespace detail

// Deterministic Miller-Rabin. The witness set {2,...,37} decides primality
// for every n < 3.3 * 10^24, far beyond the 2^62 cap.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (detail::miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

// A positive integer together with its complete prime-power factorization,
// factors sorted by prime.
struct FactoredInteger {
    u64 value = 1;
    std::vector<std::pair<u64, u32>> factors;  // (prime, exponent)

    bool operator==(const FactoredInteger&) const = default;
};

namespace detail {

// Pollard rho (Brent cycle detection). The polynomial offset c walks a fixed
// schedule 1, 2, 3, ... so the factorization is reproducible run to run.
inline u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 saved = 1;
        int len = 1;
        while (d == 1) {
            y = x;
            for (int i = 0; i < len && d == 1; ++i) {
                x = add_mod(mul_mod(x, x, n), c, n);
                u64 diff = x > y ? x - y : y - x;
                if (diff == 0) {
                    d = 0;  // cycle without factor, retry with next c
                    break;
                }
                saved = mul_mod(saved, diff, n);
                if ((i & 127) == 127) {
                    d = std::gcd(saved, n);
                    if (d == n) d = 0;
                }
            }
            if (d == 1) {
                d = std::gcd(saved, n);
                if (d == n) d = 0;
            }
            len *= 2;
            if (len < 0) break;
        }
        if (d > 1 && d < n) return d;
    }
}

inline void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Complete factorization: trial division for small factors, Pollard rho for
// the remaining cofactor. n = 1 yields an empty factor list.
inline FactoredInteger factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    FactoredInteger f;
    f.value = n;
    std::vector<u64> primes;
    for (u64 q = 2; q < 1024 && q * q <= n; q = (q == 2 ? 3 : q + 2)) {
        while (n % q == 0) {
            primes.push_back(q);
            n /= q;
        }
    }
    detail::factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 q : primes) {
        if (!f.factors.empty() && f.factors.back().first == q)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(q, 1);
    }
    return f;
}

inline u64 euler_phi(const FactoredInteger& n) {
    u64 phi = n.value;
    for (const auto& [q, e] : n.factors) phi = phi / q * (q - 1);
    return phi;
}

inline u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

// d(n) = prod (e_i + 1)
inline u64 divisor_count(const FactoredInteger& n) {
    u64 d = 1;
    for (const auto& [q, e] : n.factors) d *= e + 1;
    return d;
}

inline u64 divisor_count(u64 n) { return divisor_count(factorize(n)); }

// sigma(n) = prod (q^(e+1) - 1) / (q - 1), exact
inline u64 divisor_sum(const FactoredInteger& n) {
    u128 s = 1;
    for (const auto& [q, e] : n.factors) {
        u128 term = 1, qk = 1;
        for (u32 i = 0; i < e; ++i) {
            qk *= q;
            term += qk;
        }
        s *= term;
        if (s > (u128{1} << 126)) throw std::overflow_error("divisor_sum: overflow");
    }
    if (s > ~u64{0}) throw std::overflow_error("divisor_sum: overflow");
    return static_cast<u64>(s);
}

inline u64 divisor_sum(u64 n) { return divisor_sum(factorize(n)); }

namespace detail {

inline constexpr u64 sieve_segment_size = u64{1} << 20;

// Odd-only sieve of [0, limit], returning the primes in order.
inline std::vector<u64> small_primes_upto(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp((limit + 1) / 2, false);  // comp[i] marks 2i+1
    primes.push_back(2);
    for (u64 i = 1; 2 * i + 1 <= limit; ++i) {
        if (comp[i]) continue;
        u64 p = 2 * i + 1;
        primes.push_back(p);
        if (p <= limit / p)
            for (u64 j = p * p; j <= limit; j += 2 * p)
                if (j & 1) comp[j / 2] = true;
    }
    return primes;
}

inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

}  // namespace detail

// Visits every prime in [lo, hi], ascending. Segmented sieve with ~2^20-wide
// blocks; the base sieve covers sqrt(hi).
template <class Fn>
void for_each_prime(u64 lo, u64 hi, Fn&& fn) {
    if (hi < 2 || lo > hi) return;
    if (lo < 2) lo = 2;
    const u64 root = detail::isqrt_u64(hi);
    const std::vector<u64> base = detail::small_primes_upto(root);
    for (u64 seg_lo = lo; seg_lo <= hi;) {
        const u64 seg_hi = std::min(hi, seg_lo + (detail::sieve_segment_size - 1));
        std::vector<bool> comp(seg_hi - seg_lo + 1, false);
        for (u64 q : base) {
            u64 start = std::max(q * q, (seg_lo + q - 1) / q * q);
            if (start > seg_hi) continue;
            for (u64 j = start; j <= seg_hi; j += q) {
                comp[j - seg_lo] = true;
                if (j > seg_hi - q) break;  // guard j + q overflow
            }
        }
        for (u64 off = 0; off <= seg_hi - seg_lo; ++off)
            if (!comp[off]) fn(seg_lo + off);
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
}

inline std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
    return out;
}

}  // namespace simroots
