#include <catch2/catch.hpp>

#include <algorithm>

#include "simroots/counting.hpp"
#include "simroots/primitive_roots.hpp"

using namespace simroots;

namespace {

std::vector<std::pair<u64, u64>> tuple_pairs(const TupleSpectrum& spec) {
    std::vector<std::pair<u64, u64>> out;
    for (const SpectrumRow& row : spec.rows)
        if (row.is_tuple) out.emplace_back(row.z, row.values[0]);
    return out;
}

}  // namespace

TEST_CASE("simultaneous_spectrum reproduces the four reference examples", "[counting]") {
    const TupleSpectrum s97 = simultaneous_spectrum(97, {parse_poly("t^2+1")});
    CHECK(s97.tuple_count == 4);
    CHECK(tuple_pairs(s97) ==
          std::vector<std::pair<u64, u64>>{{5, 26}, {38, 87}, {59, 87}, {92, 26}});

    CHECK(simultaneous_spectrum(101, {parse_poly("t^2+1")}).tuple_count == 12);
    CHECK(simultaneous_spectrum(127, {parse_poly("(t+2)*(t+1)^2")}).tuple_count == 9);

    const TupleSpectrum s89 = simultaneous_spectrum(89, {parse_poly("(t+2)*(t+1)^2")});
    CHECK(s89.tuple_count == 18);
    CHECK(tuple_pairs(s89) == std::vector<std::pair<u64, u64>>{
                                  {13, 3},  {26, 31}, {27, 41}, {28, 43}, {29, 43}, {31, 61},
                                  {33, 54}, {35, 70}, {41, 24}, {46, 33}, {54, 33}, {56, 29},
                                  {58, 66}, {60, 14}, {61, 3},  {63, 41}, {74, 33}, {75, 19}});
}

TEST_CASE("simultaneous_spectrum structure", "[counting]") {
    const TupleSpectrum spec = simultaneous_spectrum(3, {parse_poly("t")});
    REQUIRE(spec.rows.size() == 1);
    CHECK(spec.rows[0] == SpectrumRow{2, {2}, true});
    CHECK(spec.tuple_count == 1);

    CHECK_THROWS_AS(simultaneous_spectrum(96, {parse_poly("t")}), std::domain_error);
    CHECK_THROWS_AS(simultaneous_spectrum(97, {}), std::invalid_argument);

    // k-tuple: adjoining the identity changes nothing
    const TupleSpectrum pair = simultaneous_spectrum(97, {parse_poly("t^2+1"), parse_poly("t")});
    CHECK(pair.tuple_count == 4);
    REQUIRE(pair.rows[0].values.size() == 2);
}

TEST_CASE("rows are exactly the primitive roots, values match eval_mod", "[counting]") {
    const IntPolynomial f = parse_poly("t^2+1");
    for (u64 p : {89ull, 97ull, 101ull, 127ull}) {
        const PrimeContext ctx = least_primitive_root(p);
        const TupleSpectrum spec = simultaneous_spectrum(p, {f});
        const std::vector<u64> roots = enumerate_primitive_roots(ctx);
        REQUIRE(spec.rows.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(spec.rows[i].z == roots[i]);
            CHECK(spec.rows[i].values[0] == eval_mod(f, roots[i], p));
        }
    }
}

TEST_CASE("tuple_count bounds and identity saturation, p <= 1000", "[counting]") {
    const IntPolynomial ident = parse_poly("t");
    const IntPolynomial f = parse_poly("t^2+1");
    u64 bad = 0;
    for_each_prime(2, 1000, [&](u64 p) {
        const PrimeContext ctx = least_primitive_root(p);
        if (simultaneous_spectrum(p, {ident}).tuple_count != ctx.phi_p_minus_1) ++bad;
        if (simultaneous_spectrum(p, {f}).tuple_count > ctx.phi_p_minus_1) ++bad;
    });
    CHECK(bad == 0);
}

TEST_CASE("tuple_count equals the characteristic-function sum, p <= 500", "[counting]") {
    const IntPolynomial f = parse_poly("t^2+1");
    u64 bad = 0;
    for_each_prime(2, 500, [&](u64 p) {
        const PrimeContext ctx = least_primitive_root(p);
        u64 psi_sum = 0;
        for (u64 z = 1; z < p; ++z)
            psi_sum += static_cast<u64>(psi_exact(z, ctx) * psi_exact(eval_mod(f, z, p), ctx));
        if (psi_sum != simultaneous_spectrum(p, {f}).tuple_count) ++bad;
    });
    CHECK(bad == 0);
}

TEST_CASE("f(p-z) = f(z) for f = t^2+1; symmetry itself is only a statistic", "[counting]") {
    const IntPolynomial f = parse_poly("t^2+1");
    u64 bad = 0;
    for_each_prime(3, 500, [&](u64 p) {
        for (u64 z = 1; z < p; ++z)
            if (eval_mod(f, p - z, p) != eval_mod(f, z, p)) ++bad;
    });
    CHECK(bad == 0);
}

TEST_CASE("count_pi_f", "[counting]") {
    const IntPolynomial f = parse_poly("t^2+1");
    CHECK(count_pi_f(10, 2, f) == 1);  // only p = 3 qualifies
    CHECK(count_pi_f(2, 2, f) == 0);   // z = 0 mod 2

    // independent brute force over small primes
    u64 expect = 0;
    for (u64 p : primes_in_range(2, 2000)) {
        const PrimeContext ctx = least_primitive_root(p);
        const u64 z = 2 % p;
        const u64 v = eval_mod(f, z, p);
        if (z != 0 && v != 0 && multiplicative_order(z, ctx) == p - 1 &&
            multiplicative_order(v, ctx) == p - 1)
            ++expect;
    }
    CHECK(count_pi_f(2000, 2, f) == expect);
}

TEST_CASE("count_pi_f is monotone in x and worker-independent", "[counting]") {
    const IntPolynomial f = parse_poly("t^2+1");
    u64 prev = 0;
    for (u64 x : {10ull, 100ull, 1000ull, 5000ull}) {
        const u64 c = count_pi_f(x, 2, f);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(count_pi_f(5000, 2, f) == count_pi_f(5000, 2, f, 4));
    // negative base: reduced mod p per prime
    CHECK(count_pi_f(1000, -3, f) == count_pi_f(1000, -3, f, 8));
}

TEST_CASE("sweep_series covers every prime exactly once, ascending", "[counting]") {
    const SweepSeries series = sweep_series(100, 2, parse_poly("t^2+1"));
    const std::vector<u64> primes = primes_in_range(2, 100);
    REQUIRE(series.records.size() == primes.size());
    u64 hits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        CHECK(series.records[i].p == primes[i]);
        if (series.records[i].hit) ++hits;
    }
    CHECK(hits == count_pi_f(100, 2, parse_poly("t^2+1")));
}

TEST_CASE("prime_primitive_root_count", "[counting]") {
    CHECK(prime_primitive_root_count(least_primitive_root(7)) == 2);   // {3, 5}
    CHECK(prime_primitive_root_count(least_primitive_root(3)) == 1);   // {2}
    CHECK(prime_primitive_root_count(least_primitive_root(2)) == 0);

    // set-intersection oracle at p = 97
    const PrimeContext ctx = least_primitive_root(97);
    const std::vector<u64> roots = enumerate_primitive_roots(ctx);
    u64 expect = 0;
    for (u64 q : primes_in_range(2, 96))
        if (std::binary_search(roots.begin(), roots.end(), q)) ++expect;
    CHECK(prime_primitive_root_count(ctx) == expect);
}

TEST_CASE("restricted_average_order", "[counting]") {
    const PrimeContext c7 = least_primitive_root(7);
    CHECK(restricted_average_order(c7, ArithmeticFn::divisor_count) == 4);   // d(3)+d(5)
    CHECK(restricted_average_order(c7, ArithmeticFn::divisor_sum) == 10);    // 4+6
    CHECK(restricted_average_order(c7, ArithmeticFn::euler_phi) == 6);       // 2+4
    // incomplete variant cuts at the limit
    CHECK(restricted_average_order(c7, ArithmeticFn::divisor_count, 3) == 2);
    CHECK(restricted_average_order(c7, ArithmeticFn::divisor_sum, 4) == 4);
}

TEST_CASE("value_set_count", "[counting]") {
    const PrimeContext c7 = least_primitive_root(7);
    CHECK(value_set_count(c7, ArithmeticFn::divisor_count) == 0);
    CHECK(value_set_count(c7, ArithmeticFn::euler_phi) == 0);

    // brute-force oracle at p = 97 for all three functions
    const PrimeContext ctx = least_primitive_root(97);
    const std::vector<u64> roots = enumerate_primitive_roots(ctx);
    for (ArithmeticFn fn :
         {ArithmeticFn::divisor_count, ArithmeticFn::divisor_sum, ArithmeticFn::euler_phi}) {
        u64 expect = 0;
        for (u64 r : roots)
            if (std::binary_search(roots.begin(), roots.end(), apply_arithmetic_fn(fn, r) % 97))
                ++expect;
        CHECK(value_set_count(ctx, fn) == expect);
    }
}

TEST_CASE("symmetry_statistic", "[counting]") {
    CHECK(symmetry_statistic(simultaneous_spectrum(97, {parse_poly("t^2+1")})).value() == 1.0);
    CHECK(symmetry_statistic(simultaneous_spectrum(101, {parse_poly("t^2+1")})).value() == 1.0);

    // p = 7, f = t^2+1: tuples (3,3) and (5,5); neither mirror is a tuple row
    const SymmetryStat s7 = symmetry_statistic(simultaneous_spectrum(7, {parse_poly("t^2+1")}));
    CHECK(s7.tuple_rows == 2);
    CHECK(s7.symmetric_rows == 0);
    CHECK_FALSE(s7.empty);

    // synthetic single tuple row without its mirror
    TupleSpectrum synth;
    synth.p = 11;
    synth.polys = {parse_poly("t")};
    synth.rows = {{2, {2}, true}, {6, {6}, false}};
    synth.tuple_count = 1;
    const SymmetryStat ss = symmetry_statistic(synth);
    CHECK(ss.value() == 0.0);
    CHECK_FALSE(ss.empty);

    // p = 5, f = t^2+1: f(2) and f(3) vanish mod 5, no tuples at all
    const SymmetryStat empty = symmetry_statistic(simultaneous_spectrum(5, {parse_poly("t^2+1")}));
    CHECK(empty.empty);
    CHECK(empty.value() == 0.0);
    CHECK(empty.tuple_rows == 0);
}
