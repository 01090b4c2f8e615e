#pragma once

// Density-side quantities: the logarithmic integral, the Artin-type Euler
// product, empirical averages of (phi(p-1)/(p-1))^k over primes, the main
// terms M(x) and M(f,p), and the empirical densities delta_f(z) and c(f,p).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "simroots/arith.hpp"
#include "simroots/counting.hpp"
#include "simroots/parallel.hpp"
#include "simroots/primitive_roots.hpp"
#include "simroots/rational.hpp"

namespace simroots {

// Neumaier compensated summation in long double (>= 80-bit effective on x86).
struct CompensatedSum {
    long double sum = 0.0L;
    long double comp = 0.0L;

    void add(long double x) {
        long double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    long double value() const { return sum + comp; }
};

// Principal-value logarithmic integral li(x) = int_0^x dt/ln t for x >= 2,
// via li(x) = Ei(ln x) and the series Ei(y) = gamma + ln y + sum y^k/(k k!).
inline double log_integral(double x) {
    if (x < 2.0) throw std::domain_error("log_integral: x must be >= 2");
    constexpr long double euler_gamma = 0.57721566490153286060651209008240243104L;
    const long double y = std::log(static_cast<long double>(x));
    long double acc = euler_gamma + std::log(y);
    long double term = 1.0L;
    for (int k = 1; k < 20000; ++k) {
        term *= y / k;
        const long double add = term / k;
        acc += add;
        if (add < 1e-22L * std::fabs(acc)) break;
    }
    return static_cast<double>(acc);
}

struct ArtinProduct {
    double value = 1.0;
    double tail_bound = 0.0;  // bound on sum_{p > bound} 1/(p(p-1))
};

// Partial Euler product prod_{p <= bound} (1 - 1/(p(p-1))). The neglected
// tail satisfies sum_{p > bound} 1/(p(p-1)) < 1/bound.
inline ArtinProduct artin_product(u64 bound) {
    if (bound < 2) throw std::domain_error("artin_product: bound must be >= 2");
    long double prod = 1.0L;
    for_each_prime(2, bound, [&](u64 p) {
        prod *= 1.0L - 1.0L / (static_cast<long double>(p) * static_cast<long double>(p - 1));
    });
    return {static_cast<double>(prod), 1.0 / static_cast<double>(bound)};
}

namespace detail {

// phi(n) for all n <= limit by linear sieve, plus the primes themselves.
struct TotientSieve {
    std::vector<u32> phi;
    std::vector<u64> primes;
};

inline TotientSieve totient_sieve(u64 limit) {
    TotientSieve s;
    s.phi.assign(limit + 1, 0);
    if (limit >= 1) s.phi[1] = 1;
    std::vector<char> comp(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            s.primes.push_back(i);
            s.phi[i] = static_cast<u32>(i - 1);
        }
        for (u64 q : s.primes) {
            if (q > limit / i) break;
            comp[q * i] = 1;
            if (i % q == 0) {
                s.phi[q * i] = static_cast<u32>(s.phi[i] * q);
                break;
            }
            s.phi[q * i] = static_cast<u32>(s.phi[i] * (q - 1));
        }
    }
    return s;
}

inline constexpr u64 totient_sieve_limit = 10'000'000;

// Calls fn(p, phi(p-1)) for every prime p <= x in ascending order within
// each fixed chunk; per-chunk partials are combined in chunk order, so the
// result is identical for every worker count.
template <class PartialFn, class CombineFn>
void phi_over_primes(u64 x, unsigned workers, PartialFn make_partial, CombineFn combine) {
    const std::vector<ChunkRange> chunks = make_chunks(2, x, default_chunk_width);
    if (x <= totient_sieve_limit) {
        const TotientSieve sieve = totient_sieve(x);
        chunked_reduce<decltype(make_partial(ChunkRange{}))>(
            chunks, workers,
            [&](ChunkRange r) {
                auto part = make_partial(r);
                auto lo = std::lower_bound(sieve.primes.begin(), sieve.primes.end(), r.lo);
                auto hi = std::upper_bound(sieve.primes.begin(), sieve.primes.end(), r.hi);
                for (auto it = lo; it != hi; ++it) part.visit(*it, sieve.phi[*it - 1]);
                return part;
            },
            combine);
    } else {
        chunked_reduce<decltype(make_partial(ChunkRange{}))>(
            chunks, workers,
            [&](ChunkRange r) {
                auto part = make_partial(r);
                for_each_prime(r.lo, r.hi,
                               [&](u64 p) { part.visit(p, euler_phi(factorize(p - 1))); });
                return part;
            },
            combine);
    }
}

struct RatioPowPartial {
    int k = 1;
    bool shrink = false;  // multiply by (1 - 1/p)^2 (the M(x) weight)
    CompensatedSum acc;
    u64 prime_count = 0;

    void visit(u64 p, u64 phi_pm1) {
        ++prime_count;
        long double term = 1.0L;
        const long double ratio =
            static_cast<long double>(phi_pm1) / static_cast<long double>(p - 1);
        for (int i = 0; i < k; ++i) term *= ratio;
        if (shrink) {
            const long double w = static_cast<long double>(p - 1) / static_cast<long double>(p);
            term *= w * w;
        }
        acc.add(term);
    }
};

}  // namespace detail

// Number of primes <= x.
inline u64 prime_count(u64 x, unsigned workers = 1) {
    u64 total = 0;
    chunked_reduce<u64>(
        make_chunks(2, x, default_chunk_width), workers,
        [&](ChunkRange r) {
            u64 c = 0;
            for_each_prime(r.lo, r.hi, [&](u64) { ++c; });
            return c;
        },
        [&](std::size_t, u64 c) { total += c; });
    return total;
}

// One empirical a_k measurement: the exact-order sum with both the li- and
// pi-normalized ratios.
struct DensityReport {
    u64 x = 0;
    int k = 1;
    long double sum_exact = 0.0L;  // sum over p <= x of (phi(p-1)/(p-1))^k
    double li_x = 0.0;
    u64 pi_x = 0;
    double ratio_li = 0.0;
    double ratio_pi = 0.0;
};

inline DensityReport empirical_ak(u64 x, int k, unsigned workers = 1) {
    if (k < 0) throw std::domain_error("empirical_ak: k must be nonnegative");
    DensityReport rep;
    rep.x = x;
    rep.k = k;
    CompensatedSum total;
    u64 primes = 0;
    detail::phi_over_primes(
        x, workers,
        [&](ChunkRange) {
            detail::RatioPowPartial p;
            p.k = k;
            return p;
        },
        [&](std::size_t, const detail::RatioPowPartial& part) {
            total.add(part.acc.sum);
            total.add(part.acc.comp);
            primes += part.prime_count;
        });
    rep.sum_exact = total.value();
    rep.pi_x = primes;
    rep.li_x = log_integral(static_cast<double>(x));
    rep.ratio_li = static_cast<double>(rep.sum_exact / rep.li_x);
    rep.ratio_pi = static_cast<double>(rep.sum_exact / static_cast<long double>(rep.pi_x));
    return rep;
}

// M(x) = sum_{p <= x} (phi(p-1)/(p-1))^2 (1 - 1/p)^2, exact accumulation in
// extended precision.
inline long double main_term_Mx(u64 x, unsigned workers = 1) {
    CompensatedSum total;
    detail::phi_over_primes(
        x, workers,
        [&](ChunkRange) {
            detail::RatioPowPartial p;
            p.k = 2;
            p.shrink = true;
            return p;
        },
        [&](std::size_t, const detail::RatioPowPartial& part) {
            total.add(part.acc.sum);
            total.add(part.acc.comp);
        });
    return total.value();
}

enum class MainTermMode { exact, asymptotic };

// M(f,p) as an exact rational: (phi(p-1)/(p-1))^2 (1-1/p)^2 p in exact mode
// (which simplifies to phi(p-1)^2 / p), or (phi(p-1)/(p-1))^2 p in the
// asymptotic form quoted with the per-prime counting results.
inline Rational main_term_Mfp(const PrimeContext& ctx, MainTermMode mode) {
    const i128 phi = static_cast<i128>(ctx.phi_p_minus_1);
    const i128 p = static_cast<i128>(ctx.p);
    const i128 pm1 = ctx.p == 2 ? 1 : static_cast<i128>(ctx.p - 1);
    if (mode == MainTermMode::asymptotic) return Rational(phi * phi * p, pm1 * pm1);
    return Rational(phi * phi, p);
}

// Empirical delta_f(z) at level x: pi_f(x, z) / pi(x).
inline double empirical_delta(u64 x, i64 z, const IntPolynomial& f, unsigned workers = 1) {
    u64 hits = 0, primes = 0;
    const std::vector<IntPolynomial> polys{f};
    chunked_reduce<std::pair<u64, u64>>(
        make_chunks(2, x, default_chunk_width), workers,
        [&](ChunkRange r) {
            std::pair<u64, u64> c{0, 0};
            for_each_prime(r.lo, r.hi, [&](u64 p) {
                ++c.second;
                if (simultaneous_hit(z, polys, p)) ++c.first;
            });
            return c;
        },
        [&](std::size_t, std::pair<u64, u64> c) {
            hits += c.first;
            primes += c.second;
        });
    if (primes == 0) return 0.0;
    return static_cast<double>(hits) / static_cast<double>(primes);
}

// Empirical per-prime density ratio c(f,p) = N_f(p) / M(f,p)_asymptotic.
inline Rational empirical_cfp_exact(const PrimeContext& ctx, const IntPolynomial& f) {
    const TupleSpectrum spec = simultaneous_spectrum(ctx.p, {f});
    const Rational main = main_term_Mfp(ctx, MainTermMode::asymptotic);
    return Rational(static_cast<i128>(spec.tuple_count)) / main;
}

inline double empirical_cfp(const PrimeContext& ctx, const IntPolynomial& f) {
    return empirical_cfp_exact(ctx, f).to_double();
}

}  // namespace simroots
