#pragma once

// The two counting sides: N_f(p) over residues for a fixed prime (tuple
// spectra) and pi_f(x, z) over primes for a fixed integer base, generalized
// to k-tuples of polynomials, plus the restricted-average-order and
// value-set statistics.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simroots/arith.hpp"
#include "simroots/parallel.hpp"
#include "simroots/polynomial.hpp"
#include "simroots/primitive_roots.hpp"

namespace simroots {

struct SpectrumRow {
    u64 z = 0;
    std::vector<u64> values;  // f_i(z) mod p, true values (no sentinel)
    bool is_tuple = false;

    bool operator==(const SpectrumRow&) const = default;
};

// Per-prime table of (z, f_1(z), ...) over the primitive roots z, with the
// simultaneous-tuple rows flagged. Rows are ascending in z and there are
// exactly phi(p-1) of them.
struct TupleSpectrum {
    u64 p = 2;
    std::vector<IntPolynomial> polys;
    std::vector<SpectrumRow> rows;
    u64 tuple_count = 0;

    bool operator==(const TupleSpectrum&) const = default;
};

// Exhaustive scan of z in [1, p-1]. With one polynomial, tuple_count is the
// counting function N_f(p).
inline TupleSpectrum simultaneous_spectrum(u64 p, const std::vector<IntPolynomial>& polys) {
    if (polys.empty()) throw std::invalid_argument("simultaneous_spectrum: no polynomials");
    const PrimeContext ctx = least_primitive_root(p);  // throws if p is not prime
    std::vector<char> is_pr(p, 0);
    const std::vector<u64> roots = enumerate_primitive_roots(ctx);
    for (u64 r : roots) is_pr[r] = 1;
    TupleSpectrum spec;
    spec.p = p;
    spec.polys = polys;
    spec.rows.reserve(roots.size());
    for (u64 z : roots) {
        SpectrumRow row;
        row.z = z;
        row.is_tuple = true;
        row.values.reserve(polys.size());
        for (const IntPolynomial& f : polys) {
            const u64 v = eval_mod(f, z, p);
            row.values.push_back(v);
            if (!is_pr[v]) row.is_tuple = false;
        }
        if (row.is_tuple) ++spec.tuple_count;
        spec.rows.push_back(std::move(row));
    }
    return spec;
}

// True iff z mod p and every f_i(z) mod p are primitive roots mod p.
// Residues that vanish mod p never count (their order is undefined).
inline bool simultaneous_hit(i64 z, const std::vector<IntPolynomial>& polys, u64 p) {
    i64 zr = z % static_cast<i64>(p);
    if (zr < 0) zr += static_cast<i64>(p);
    const u64 zm = static_cast<u64>(zr);
    if (zm == 0) return false;
    const FactoredInteger pm1 = factorize(p - 1);
    if (!is_primitive_root(zm, p, pm1)) return false;
    for (const IntPolynomial& f : polys)
        if (!is_primitive_root(eval_mod(f, zm, p), p, pm1)) return false;
    return true;
}

inline bool simultaneous_hit(i64 z, const IntPolynomial& f, u64 p) {
    return simultaneous_hit(z, std::vector<IntPolynomial>{f}, p);
}

// pi_f(x, z): primes p <= x with z and f(z) simultaneous primitive roots.
// Chunked over disjoint prime ranges; the integer reduction is order
// independent, so the count is identical for every worker count.
inline u64 count_pi_f(u64 x, i64 z, const IntPolynomial& f, unsigned workers = 1) {
    const std::vector<IntPolynomial> polys{f};
    u64 total = 0;
    chunked_reduce<u64>(
        make_chunks(2, x, default_chunk_width), workers,
        [&](ChunkRange r) {
            u64 c = 0;
            for_each_prime(r.lo, r.hi, [&](u64 p) { c += simultaneous_hit(z, polys, p) ? 1 : 0; });
            return c;
        },
        [&](std::size_t, u64 c) { total += c; });
    return total;
}

struct SweepRecord {
    u64 p = 0;
    bool hit = false;

    bool operator==(const SweepRecord&) const = default;
};

// Per-prime hit series for every prime <= x_max, ascending.
struct SweepSeries {
    i64 z = 0;
    IntPolynomial poly;
    std::vector<SweepRecord> records;
    u64 x_max = 0;
};

inline SweepSeries sweep_series(u64 x_max, i64 z, const IntPolynomial& f, unsigned workers = 1) {
    SweepSeries series;
    series.z = z;
    series.poly = f;
    series.x_max = x_max;
    const std::vector<IntPolynomial> polys{f};
    chunked_reduce<std::vector<SweepRecord>>(
        make_chunks(2, x_max, default_chunk_width), workers,
        [&](ChunkRange r) {
            std::vector<SweepRecord> recs;
            for_each_prime(r.lo, r.hi,
                           [&](u64 p) { recs.push_back({p, simultaneous_hit(z, polys, p)}); });
            return recs;
        },
        [&](std::size_t, const std::vector<SweepRecord>& recs) {
            series.records.insert(series.records.end(), recs.begin(), recs.end());
        });
    return series;
}

// U(p): primes q < p that are primitive roots mod p.
inline u64 prime_primitive_root_count(const PrimeContext& ctx) {
    u64 count = 0;
    if (ctx.p < 3) return 0;
    for_each_prime(2, ctx.p - 1, [&](u64 q) {
        if (is_primitive_root(q, ctx.p, ctx.p_minus_1)) ++count;
    });
    return count;
}

enum class ArithmeticFn { divisor_count, divisor_sum, euler_phi };

inline u64 apply_arithmetic_fn(ArithmeticFn fn, u64 n) {
    const FactoredInteger f = factorize(n);
    switch (fn) {
        case ArithmeticFn::divisor_count: return divisor_count(f);
        case ArithmeticFn::divisor_sum: return divisor_sum(f);
        case ArithmeticFn::euler_phi: return euler_phi(f);
    }
    throw std::logic_error("apply_arithmetic_fn: bad enum");
}

// Sum of fn(n) over the primitive roots n mod p, restricted to n <= limit
// when given (the incomplete variant).
inline u64 restricted_average_order(const PrimeContext& ctx, ArithmeticFn fn,
                                    std::optional<u64> limit = std::nullopt) {
    u128 sum = 0;
    for (u64 n : enumerate_primitive_roots(ctx)) {
        if (limit && n > *limit) break;  // roots are ascending
        sum += apply_arithmetic_fn(fn, n);
    }
    if (sum > ~u64{0}) throw std::overflow_error("restricted_average_order: overflow");
    return static_cast<u64>(sum);
}

// V_fn(p): primitive roots r whose fn(r), reduced mod p, is again a
// primitive root.
inline u64 value_set_count(const PrimeContext& ctx, ArithmeticFn fn) {
    u64 count = 0;
    for (u64 r : enumerate_primitive_roots(ctx)) {
        const u64 v = apply_arithmetic_fn(fn, r) % ctx.p;
        if (is_primitive_root(v, ctx.p, ctx.p_minus_1)) ++count;
    }
    return count;
}

// Fraction of tuple rows z whose mirror p-z is also a tuple row. An empty
// spectrum (no tuples) reports 0 with the empty flag set.
struct SymmetryStat {
    u64 symmetric_rows = 0;
    u64 tuple_rows = 0;
    bool empty = false;

    double value() const { return empty ? 0.0 : static_cast<double>(symmetric_rows) / static_cast<double>(tuple_rows); }
    Rational exact() const { return empty ? Rational(0) : Rational(static_cast<i128>(symmetric_rows), static_cast<i128>(tuple_rows)); }
};

inline SymmetryStat symmetry_statistic(const TupleSpectrum& spec) {
    SymmetryStat stat;
    stat.tuple_rows = spec.tuple_count;
    if (spec.tuple_count == 0) {
        stat.empty = true;
        return stat;
    }
    std::vector<char> tuple_z(spec.p, 0);
    for (const SpectrumRow& row : spec.rows)
        if (row.is_tuple) tuple_z[row.z] = 1;
    for (const SpectrumRow& row : spec.rows)
        if (row.is_tuple && tuple_z[spec.p - row.z]) ++stat.symmetric_rows;
    return stat;
}

}  // namespace simroots
