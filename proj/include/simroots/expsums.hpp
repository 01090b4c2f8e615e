#pragma once

// The incomplete exponential sum T(u,p) over nontrivial additive characters
// and primitive-root exponents, its exact closed form p*Psi(u) - phi(p-1),
// the vanishing check for the trivial-character error piece, and the exact
// four-term decomposition M + E0 + E1 + E2 of the simultaneous tuple count.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "simroots/arith.hpp"
#include "simroots/counting.hpp"
#include "simroots/polynomial.hpp"
#include "simroots/primitive_roots.hpp"
#include "simroots/rational.hpp"

namespace simroots {

struct ExpSumResult {
    u64 u = 0;
    u64 p = 2;
    std::complex<double> literal_value{0.0, 0.0};
    i64 exact_value = 0;
    // log_p |exact_value|; NaN when exact_value == 0
    double normalized_exponent = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline std::vector<std::complex<double>> unit_roots(u64 p) {
    std::vector<std::complex<double>> root(p);
    for (u64 j = 0; j < p; ++j) {
        const double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(p);
        root[j] = {std::cos(ang), std::sin(ang)};
    }
    return root;
}

// The values tau^n for gcd(n, p-1) = 1, i.e. the primitive roots, in index
// order of n.
inline std::vector<u64> primitive_power_values(const PrimeContext& ctx) {
    std::vector<u64> vals;
    vals.reserve(ctx.phi_p_minus_1);
    const u64 n = ctx.p - 1;
    u64 power = 1;
    for (u64 k = 1; k <= n; ++k) {
        power = mul_mod(power, ctx.tau, ctx.p);
        if (std::gcd(k, n) == 1) vals.push_back(power);
    }
    return vals;
}

}  // namespace detail

// Direct double summation of
//   T(u,p) = sum_{0 < a < p} sum_{gcd(n,p-1)=1} e(a (tau^n - u) / p)
// in complex floating point. Cost O(p * phi(p-1)); intended for p <= ~2000.
inline std::complex<double> t_sum_literal(u64 u, const PrimeContext& ctx) {
    const u64 p = ctx.p;
    u %= p;
    const std::vector<std::complex<double>> root = detail::unit_roots(p);
    const std::vector<u64> powers = detail::primitive_power_values(ctx);
    std::complex<double> acc{0.0, 0.0};
    for (u64 value : powers) {
        const u64 d = (value + p - u) % p;
        u64 arg = 0;
        for (u64 a = 1; a < p; ++a) {
            arg += d;
            if (arg >= p) arg -= p;
            acc += root[arg];
        }
    }
    return acc;
}

// Exact closed form T(u,p) = p * Psi(u) - phi(p-1). Extends to u == 0 where
// Psi vanishes identically.
inline i64 t_sum_exact(u64 u, const PrimeContext& ctx) {
    const int psi = psi_exact(u, ctx);
    return static_cast<i64>(ctx.p) * psi - static_cast<i64>(ctx.phi_p_minus_1);
}

inline ExpSumResult exp_sum(u64 u, const PrimeContext& ctx, bool with_literal = true) {
    ExpSumResult r;
    r.u = u % ctx.p;
    r.p = ctx.p;
    r.exact_value = t_sum_exact(u, ctx);
    if (with_literal) r.literal_value = t_sum_literal(u, ctx);
    if (r.exact_value != 0)
        r.normalized_exponent = std::log(std::fabs(static_cast<double>(r.exact_value))) /
                                std::log(static_cast<double>(ctx.p));
    return r;
}

// Literal evaluation of the full-period sum
//   sum_{0 <= a < p} sum_{gcd(n,p-1)=1} e(a (tau^n - u) / p)
// for a non-primitive u. Every inner sum runs over a complete period with
// tau^n != u, a geometric series that vanishes, so the total is 0.
inline std::complex<double> vanishing_check_e0(u64 u, const PrimeContext& ctx) {
    u %= ctx.p;
    if (u != 0 && is_primitive_root(u, ctx))
        throw std::domain_error("vanishing_check_e0: u is a primitive root (ord u = p-1)");
    const u64 p = ctx.p;
    const std::vector<std::complex<double>> root = detail::unit_roots(p);
    const std::vector<u64> powers = detail::primitive_power_values(ctx);
    std::complex<double> acc{0.0, 0.0};
    for (u64 value : powers) {
        const u64 d = (value + p - u) % p;
        u64 arg = 0;
        for (u64 a = 0; a < p; ++a) {
            acc += root[arg];
            arg += d;
            if (arg >= p) arg -= p;
        }
    }
    return acc;
}

// The four-way split of N = sum_{z < p} Psi(z) Psi(f(z)) by trivial/
// nontrivial additive character pairs:
//   M  (a = 0, b = 0)   = phi(p-1)^2 / p
//   E0 (a = 0, b != 0)  = (phi/p^2) sum_z T(f(z), p)
//   E1 (a != 0, b = 0)  = (phi/p^2) sum_z T(z, p)
//   E2 (a != 0, b != 0) = (1/p^2)  sum_z T(z, p) T(f(z), p)
// evaluated with the exact closed form of T, so the reconstruction
// M + E0 + E1 + E2 = N is an exact rational identity.
struct DecompositionReport {
    Rational main;
    Rational e0;
    Rational e1;
    Rational e2;
    Rational total;
    u64 tuple_count = 0;  // N from the brute-force spectrum
    bool exact_match = false;
};

inline DecompositionReport decomposition_check(const PrimeContext& ctx, const IntPolynomial& f) {
    const u64 p = ctx.p;
    const i64 phi = static_cast<i64>(ctx.phi_p_minus_1);
    std::vector<char> is_pr(p, 0);
    for (u64 r : enumerate_primitive_roots(ctx)) is_pr[r] = 1;
    auto t_of = [&](u64 u) -> i64 {
        return is_pr[u % p] ? static_cast<i64>(p) - phi : -phi;
    };
    i128 sum_tz = 0, sum_tf = 0, sum_t2 = 0;
    u64 n_check = 0;
    for (u64 z = 0; z < p; ++z) {
        const i64 tz = t_of(z);
        const i64 tf = t_of(eval_mod(f, z, p));
        sum_tz += tz;
        sum_tf += tf;
        sum_t2 += i128{tz} * tf;
        if (z != 0 && is_pr[z] && is_pr[eval_mod(f, z, p)]) ++n_check;
    }
    const i128 p2 = i128{p} * p;
    DecompositionReport rep;
    rep.main = Rational(i128{p} * phi * phi, p2);
    rep.e0 = Rational(i128{phi} * sum_tf, p2);
    rep.e1 = Rational(i128{phi} * sum_tz, p2);
    rep.e2 = Rational(sum_t2, p2);
    rep.total = rep.main + rep.e0 + rep.e1 + rep.e2;
    rep.tuple_count = simultaneous_spectrum(p, {f}).tuple_count;
    rep.exact_match =
        (rep.total == Rational(static_cast<i128>(rep.tuple_count))) && rep.tuple_count == n_check;
    return rep;
}

struct TScanResult {
    u64 max_abs = 0;
    u64 argmax_u = 0;  // smallest u attaining the max
    double exponent = 0.0;
};

// max over u in [1, p-1] of |T(u,p)|, with log_p of the max. Deterministic
// max-reduce over fixed chunks, ties broken by the smallest u.
inline TScanResult max_t_scan(const PrimeContext& ctx, unsigned workers = 1) {
    const u64 p = ctx.p;
    const i64 phi = static_cast<i64>(ctx.phi_p_minus_1);
    std::vector<char> is_pr(p, 0);
    for (u64 r : enumerate_primitive_roots(ctx)) is_pr[r] = 1;
    TScanResult best;
    chunked_reduce<TScanResult>(
        make_chunks(1, p - 1, default_chunk_width), workers,
        [&](ChunkRange r) {
            TScanResult local;
            for (u64 u = r.lo; u <= r.hi; ++u) {
                const i64 t = is_pr[u] ? static_cast<i64>(p) - phi : -phi;
                const u64 mag = static_cast<u64>(t < 0 ? -t : t);
                if (mag > local.max_abs) {
                    local.max_abs = mag;
                    local.argmax_u = u;
                }
            }
            return local;
        },
        [&](std::size_t, const TScanResult& local) {
            if (local.max_abs > best.max_abs) {
                best.max_abs = local.max_abs;
                best.argmax_u = local.argmax_u;
            }
        });
    best.exponent = best.max_abs == 0
                        ? 0.0
                        : std::log(static_cast<double>(best.max_abs)) /
                              std::log(static_cast<double>(p));
    return best;
}

}  // namespace simroots
