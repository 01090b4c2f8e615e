#include <catch2/catch.hpp>

#include <cmath>

#include "simroots/expsums.hpp"

using namespace simroots;

TEST_CASE("t_sum_exact closed form", "[expsums]") {
    const PrimeContext c7 = least_primitive_root(7);
    CHECK(t_sum_exact(3, c7) == 5);    // 7 - phi(6), 3 is a primitive root
    CHECK(t_sum_exact(2, c7) == -2);   // -phi(6), ord 2 = 3
    CHECK(t_sum_exact(5, least_primitive_root(97)) == 65);  // 97 - 32

    // p * psi - phi identity for every u, p <= 2000 (spot primes)
    for (u64 p : {2ull, 3ull, 31ull, 97ull, 499ull, 1999ull}) {
        const PrimeContext ctx = least_primitive_root(p);
        for (u64 u = 1; u < p; ++u) {
            const i64 expect = static_cast<i64>(p) * psi_exact(u, ctx) -
                               static_cast<i64>(ctx.phi_p_minus_1);
            CHECK(t_sum_exact(u, ctx) == expect);
        }
    }
}

TEST_CASE("t_sum_literal agrees with the closed form", "[expsums]") {
    for (u64 p : {2ull, 7ull, 31ull, 97ull, 199ull}) {
        const PrimeContext ctx = least_primitive_root(p);
        const double tol = 1e-6 * static_cast<double>(p);
        for (u64 u = 1; u < p; ++u) {
            const std::complex<double> lit = t_sum_literal(u, ctx);
            CHECK(std::abs(lit - std::complex<double>(
                                     static_cast<double>(t_sum_exact(u, ctx)), 0.0)) < tol);
            CHECK(std::abs(lit.imag()) < 1e-6 * static_cast<double>(p));
        }
    }
}

TEST_CASE("exp_sum result invariants", "[expsums]") {
    const PrimeContext c97 = least_primitive_root(97);
    const ExpSumResult r = exp_sum(5, c97);
    CHECK(r.exact_value == 65);
    CHECK(std::abs(r.literal_value -
                   std::complex<double>(static_cast<double>(r.exact_value), 0.0)) <
          1e-6 * 97.0);
    CHECK(r.normalized_exponent == Approx(std::log(65.0) / std::log(97.0)));
    CHECK(static_cast<u64>(std::abs(r.exact_value)) <= 97);
}

TEST_CASE("vanishing_check_e0", "[expsums]") {
    const PrimeContext c7 = least_primitive_root(7);
    CHECK(std::abs(vanishing_check_e0(2, c7)) < 1e-6 * 7);

    const PrimeContext c97 = least_primitive_root(97);
    CHECK(std::abs(vanishing_check_e0(1, c97)) < 1e-6 * 97);
    CHECK(std::abs(vanishing_check_e0(4, c97)) < 1e-6 * 97);

    // precondition: u must not be a primitive root
    CHECK_THROWS_AS(vanishing_check_e0(5, c97), std::domain_error);
    CHECK_THROWS_AS(vanishing_check_e0(3, c7), std::domain_error);
}

TEST_CASE("vanishing_check_e0 vanishes for every non-primitive u, p <= 97", "[expsums]") {
    u64 bad = 0;
    for_each_prime(2, 97, [&](u64 p) {
        const PrimeContext ctx = least_primitive_root(p);
        const double tol = 1e-6 * static_cast<double>(p);
        for (u64 u = 1; u < p; ++u) {
            if (is_primitive_root(u, ctx)) continue;
            if (std::abs(vanishing_check_e0(u, ctx)) >= tol) ++bad;
        }
    });
    CHECK(bad == 0);
}

TEST_CASE("decomposition_check reconstructs the tuple count exactly", "[expsums]") {
    struct Case {
        u64 p;
        const char* poly;
        u64 n;
    };
    for (const Case& c : {Case{97, "t^2+1", 4}, Case{101, "t^2+1", 12},
                          Case{127, "(t+2)*(t+1)^2", 9}, Case{89, "(t+2)*(t+1)^2", 18}}) {
        const DecompositionReport rep =
            decomposition_check(least_primitive_root(c.p), parse_poly(c.poly));
        CHECK(rep.tuple_count == c.n);
        CHECK(rep.total == Rational(static_cast<i128>(c.n)));
        CHECK(rep.exact_match);
        const double sum = rep.main.to_double() + rep.e0.to_double() + rep.e1.to_double() +
                           rep.e2.to_double();
        CHECK(sum == Approx(static_cast<double>(c.n)).epsilon(1e-6));
    }

    // identity polynomial reconstructs phi(p-1)
    const DecompositionReport ident = decomposition_check(least_primitive_root(7), parse_poly("t"));
    CHECK(ident.tuple_count == 2);
    CHECK(ident.total == Rational(2));
    CHECK(ident.exact_match);
    // M piece equals the exact main term phi^2/p
    CHECK(ident.main == Rational(4, 7));
}

TEST_CASE("decomposition identity holds for every p <= 300", "[expsums]") {
    u64 bad = 0;
    for (const char* poly : {"t^2+1", "t^3+2"}) {
        const IntPolynomial f = parse_poly(poly);
        for_each_prime(2, 300, [&](u64 p) {
            const DecompositionReport rep = decomposition_check(least_primitive_root(p), f);
            if (!rep.exact_match) ++bad;
            if (!(rep.total == Rational(static_cast<i128>(rep.tuple_count)))) ++bad;
        });
    }
    CHECK(bad == 0);
}

TEST_CASE("max_t_scan", "[expsums]") {
    const TScanResult s7 = max_t_scan(least_primitive_root(7));
    CHECK(s7.max_abs == 5);
    CHECK(s7.argmax_u == 3);
    CHECK(s7.exponent == Approx(std::log(5.0) / std::log(7.0)));

    const TScanResult s97 = max_t_scan(least_primitive_root(97));
    CHECK(s97.max_abs == 65);
    CHECK(s97.argmax_u == 5);

    // |T| <= p - 1 < p, so the exponent stays below 1; for odd p the max is
    // p - phi(p-1) > phi(p-1), attained first at the least primitive root
    u64 bad = 0;
    for_each_prime(2, 500, [&](u64 p) {
        const PrimeContext ctx = least_primitive_root(p);
        const TScanResult s = max_t_scan(ctx);
        if (s.exponent >= 1.0) ++bad;
        if (s.max_abs > p - 1 && p > 2) ++bad;
        if (p > 2 && s.argmax_u != ctx.tau) ++bad;
    });
    CHECK(bad == 0);

    // worker count does not change the deterministic max-reduce
    const PrimeContext big = least_primitive_root(1009);
    const TScanResult a = max_t_scan(big, 1);
    const TScanResult b = max_t_scan(big, 4);
    CHECK(a.max_abs == b.max_abs);
    CHECK(a.argmax_u == b.argmax_u);
}
