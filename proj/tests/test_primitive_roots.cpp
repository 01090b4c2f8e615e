#include <catch2/catch.hpp>

#include <algorithm>
#include <numeric>

#include "simroots/primitive_roots.hpp"

using namespace simroots;

TEST_CASE("least_primitive_root on the reference primes", "[proots]") {
    CHECK(least_primitive_root(97).tau == 5);
    CHECK(least_primitive_root(101).tau == 2);
    CHECK(least_primitive_root(89).tau == 3);
    CHECK(least_primitive_root(127).tau == 3);
    CHECK(least_primitive_root(3).tau == 2);
    CHECK_THROWS_AS(least_primitive_root(96), std::domain_error);
}

TEST_CASE("p = 2 degenerate case", "[proots]") {
    const PrimeContext ctx = least_primitive_root(2);
    CHECK(ctx.tau == 1);
    CHECK(ctx.phi_p_minus_1 == 1);
    CHECK(is_primitive_root(1, ctx));
    CHECK(enumerate_primitive_roots(ctx) == std::vector<u64>{1});
    CHECK(multiplicative_order(1, ctx) == 1);
    CHECK(psi_exact(1, ctx) == 1);
}

TEST_CASE("multiplicative_order", "[proots]") {
    const PrimeContext c97 = least_primitive_root(97);
    const PrimeContext c7 = least_primitive_root(7);
    CHECK(multiplicative_order(1, c97) == 1);
    CHECK(multiplicative_order(5, c97) == 96);
    CHECK(multiplicative_order(2, c7) == 3);
    CHECK_THROWS_AS(multiplicative_order(0, c7), std::domain_error);
    CHECK_THROWS_AS(multiplicative_order(97, c97), std::domain_error);
}

TEST_CASE("order divides p-1 for all z, p <= 2000", "[proots]") {
    u64 bad = 0;
    for_each_prime(2, 2000, [&](u64 p) {
        const PrimeContext ctx = least_primitive_root(p);
        for (u64 z = 1; z < p; ++z)
            if ((p - 1) % multiplicative_order(z, ctx) != 0) ++bad;
    });
    CHECK(bad == 0);
}

TEST_CASE("is_primitive_root", "[proots]") {
    const PrimeContext c97 = least_primitive_root(97);
    CHECK(is_primitive_root(5, c97));
    CHECK(is_primitive_root(26, c97));
    CHECK_FALSE(is_primitive_root(1, c97));
    CHECK_FALSE(is_primitive_root(0, c97));
    CHECK_FALSE(is_primitive_root(4, c97));  // square
}

TEST_CASE("enumerate_primitive_roots", "[proots]") {
    const std::vector<u64> roots97 = enumerate_primitive_roots(least_primitive_root(97));
    REQUIRE(roots97.size() == 32);
    const std::vector<u64> head{5, 7, 10, 13, 14, 15, 17, 21, 23, 26};
    CHECK(std::equal(head.begin(), head.end(), roots97.begin()));
    CHECK(enumerate_primitive_roots(least_primitive_root(3)) == std::vector<u64>{2});
    CHECK(enumerate_primitive_roots(least_primitive_root(7)) == std::vector<u64>{3, 5});
}

TEST_CASE("enumeration size is phi(p-1) and all elements full order, p <= 10^4", "[proots]") {
    u64 bad = 0;
    for_each_prime(2, 10'000, [&](u64 p) {
        const PrimeContext ctx = least_primitive_root(p);
        const std::vector<u64> roots = enumerate_primitive_roots(ctx);
        if (roots.size() != ctx.phi_p_minus_1) ++bad;
        if (!std::is_sorted(roots.begin(), roots.end())) ++bad;
    });
    CHECK(bad == 0);
}

TEST_CASE("discrete_log basics", "[proots]") {
    const PrimeContext c97 = least_primitive_root(97);
    CHECK(discrete_log(1, c97) == 0);
    CHECK(discrete_log(c97.tau, c97) == 1);
    const u64 k = discrete_log(26, c97);
    CHECK(pow_mod(c97.tau, k, 97) == 26);
    // exhaustive oracle
    u64 expect = 0, acc = 1;
    while (acc != 26) {
        acc = mul_mod(acc, c97.tau, 97);
        ++expect;
    }
    CHECK(k == expect);
    CHECK_THROWS_AS(discrete_log(0, c97), std::domain_error);
}

// One pass per prime: the discrete log is a bijection [1,p-1] -> [0,p-2]
// round-tripping through pow_mod, psi_exact coincides with the divisor
// test, and the psi values sum to phi(p-1).
TEST_CASE("discrete_log bijection and psi conservation, p <= 2000", "[proots]") {
    u64 bad = 0;
    for_each_prime(2, 2000, [&](u64 p) {
        const PrimeContext ctx = least_primitive_root(p);
        std::vector<char> seen(p - 1 >= 1 ? p - 1 : 1, 0);
        u64 psi_sum = 0;
        for (u64 u = 1; u < p; ++u) {
            const u64 k = discrete_log(u, ctx);
            if (k > p - 2 && p > 2) ++bad;
            if (pow_mod(ctx.tau, k, p) != u) ++bad;
            if (seen[k]) ++bad;
            seen[k] = 1;
            const int psi = psi_exact(u, ctx);
            if (psi != (is_primitive_root(u, ctx) ? 1 : 0)) ++bad;
            psi_sum += static_cast<u64>(psi);
        }
        if (psi_sum != ctx.phi_p_minus_1) ++bad;
    });
    CHECK(bad == 0);
}

TEST_CASE("psi_exact spec values", "[proots]") {
    const PrimeContext c97 = least_primitive_root(97);
    CHECK(psi_exact(5, c97) == 1);
    CHECK(psi_exact(1, c97) == 0);
    CHECK(psi_exact(0, c97) == 0);
}

TEST_CASE("psi_literal evaluates the double sum", "[proots]") {
    const PrimeContext c97 = least_primitive_root(97);
    const PrimeContext c7 = least_primitive_root(7);
    double im = 0.0;
    CHECK(psi_literal(5, c97, &im) == Approx(1.0).margin(1e-6));
    CHECK(std::abs(im) < 1e-6);
    CHECK(psi_literal(2, c7, &im) == Approx(0.0).margin(1e-6));
    CHECK(std::abs(im) < 1e-6);
}

TEST_CASE("psi_literal rounds to psi_exact for p <= 97", "[proots]") {
    u64 bad = 0;
    for_each_prime(2, 97, [&](u64 p) {
        const PrimeContext ctx = least_primitive_root(p);
        for (u64 u = 1; u < p; ++u) {
            double im = 0.0;
            const double lit = psi_literal(u, ctx, &im);
            if (std::abs(lit - psi_exact(u, ctx)) > 1e-6 || std::abs(im) > 1e-6) ++bad;
        }
    });
    CHECK(bad == 0);
}
