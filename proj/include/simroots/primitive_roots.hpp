#pragma once

// Multiplicative orders, primitive-root testing and enumeration, baby-step
// giant-step discrete logarithms, and the characteristic function of
// primitive roots in both its exact (index) form and its literal
// exponential-sum form.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "simroots/arith.hpp"

namespace simroots {

// A prime p with the factored p-1, phi(p-1), and the least primitive root.
// Immutable after construction and safe to share across threads.
struct PrimeContext {
    u64 p = 2;
    FactoredInteger p_minus_1;
    u64 phi_p_minus_1 = 1;
    u64 tau = 1;
};

// z is a primitive root iff z^((p-1)/q) != 1 for every prime q | p-1.
// z == 0 is false by convention so polynomial values f(z) == 0 mod p are
// handled uniformly.
inline bool is_primitive_root(u64 z, u64 p, const FactoredInteger& p_minus_1) {
    z %= p;
    if (z == 0) return false;
    const u64 n = p - 1;
    for (const auto& [q, e] : p_minus_1.factors)
        if (pow_mod(z, n / q, p) == 1) return false;
    return true;
}

inline bool is_primitive_root(u64 z, const PrimeContext& ctx) {
    return is_primitive_root(z, ctx.p, ctx.p_minus_1);
}

// Builds the context for a prime p; tau is found by ascending search.
// p = 2 is the degenerate supported case: p-1 = 1, phi(1) = 1, tau = 1.
inline PrimeContext least_primitive_root(u64 p) {
    if (!is_prime(p)) throw std::domain_error("least_primitive_root: p is not prime");
    PrimeContext ctx;
    ctx.p = p;
    ctx.p_minus_1 = factorize(p - 1);
    ctx.phi_p_minus_1 = euler_phi(ctx.p_minus_1);
    for (u64 z = 1;; ++z) {
        if (is_primitive_root(z, p, ctx.p_minus_1)) {
            ctx.tau = z;
            break;
        }
    }
    return ctx;
}

// Least k >= 1 with z^k == 1 (mod p): start from p-1 and strip prime factors
// while the power stays 1.
inline u64 multiplicative_order(u64 z, const PrimeContext& ctx) {
    z %= ctx.p;
    if (z == 0) throw std::domain_error("multiplicative_order: z is divisible by p");
    u64 ord = ctx.p - 1;
    for (const auto& [q, e] : ctx.p_minus_1.factors) {
        for (u32 i = 0; i < e; ++i) {
            if (ord % q != 0) break;
            if (pow_mod(z, ord / q, ctx.p) != 1) break;
            ord /= q;
        }
    }
    return ord;
}

// Exactly the residues of full order p-1, ascending: {tau^n : gcd(n, p-1)=1}.
inline std::vector<u64> enumerate_primitive_roots(const PrimeContext& ctx) {
    const u64 n = ctx.p - 1;
    if (ctx.p == 2) return {1};
    std::vector<u64> roots;
    roots.reserve(ctx.phi_p_minus_1);
    u64 power = 1;
    for (u64 k = 1; k <= n; ++k) {
        power = mul_mod(power, ctx.tau, ctx.p);
        if (std::gcd(k, n) == 1) roots.push_back(power);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Baby-step/giant-step: the unique k in [0, p-2] with tau^k == u (mod p).
inline u64 discrete_log(u64 u, const PrimeContext& ctx) {
    u %= ctx.p;
    if (u == 0) throw std::domain_error("discrete_log: u is divisible by p");
    const u64 p = ctx.p;
    const u64 n = p - 1;  // group order
    if (u == 1) return 0;
    const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::unordered_map<u64, u64> baby;
    baby.reserve(static_cast<std::size_t>(m) * 2);
    u64 val = 1;
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(val, j);  // keep the smallest j on collision
        val = mul_mod(val, ctx.tau, p);
    }
    const u64 giant = pow_mod(ctx.tau, n - (m % n == 0 ? n : m % n), p);  // tau^{-m}
    u64 gamma = u;
    for (u64 i = 0; i * m <= n; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) {
            u64 k = i * m + it->second;
            return k % n;
        }
        gamma = mul_mod(gamma, giant, p);
    }
    throw std::logic_error("discrete_log: no solution (tau is not a generator?)");
}

// Divisor-free characteristic value of primitive roots: 1 iff the index of u
// is coprime to p-1. psi_exact(0) = 0 since the inner geometric sum of the
// literal form vanishes for u = 0.
inline int psi_exact(u64 u, const PrimeContext& ctx) {
    u %= ctx.p;
    if (u == 0) return 0;
    const u64 k = discrete_log(u, ctx);
    return std::gcd(k, ctx.p - 1) == 1 ? 1 : 0;
}

// Literal evaluation of the double exponential sum
//   (1/p) sum_{gcd(n,p-1)=1} sum_{0<=k<p} e^{i 2 pi (tau^n - u) k / p}
// in complex floating point. Returns the real part; the imaginary part is
// written to imag_out when given (it stays below 1e-6 in magnitude).
// Cost O(p * phi(p-1)); intended for p up to ~2000.
inline double psi_literal(u64 u, const PrimeContext& ctx, double* imag_out = nullptr) {
    const u64 p = ctx.p;
    u %= p;
    const u64 n = p - 1;
    // e^{i 2 pi j / p} for j in [0, p)
    std::vector<std::complex<double>> root(p);
    for (u64 j = 0; j < p; ++j) {
        double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(p);
        root[j] = {std::cos(ang), std::sin(ang)};
    }
    std::complex<double> acc{0.0, 0.0};
    u64 tau_n = 1;
    for (u64 idx = 1; idx <= n; ++idx) {
        tau_n = mul_mod(tau_n, ctx.tau, p);
        if (std::gcd(idx, n) != 1) continue;
        const u64 d = (tau_n + p - u) % p;
        std::complex<double> inner{0.0, 0.0};
        u64 arg = 0;
        for (u64 k = 0; k < p; ++k) {
            inner += root[arg];
            arg += d;
            if (arg >= p) arg -= p;
        }
        acc += inner;
    }
    acc /= static_cast<double>(p);
    if (imag_out) *imag_out = acc.imag();
    return acc.real();
}

}  // namespace simroots
