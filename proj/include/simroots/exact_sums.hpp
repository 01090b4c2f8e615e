#pragma once

// Exact rational accumulation of the prime sums, for oracle-grade
// cross-checks of the extended-precision accumulators. Practical below
// x = 10^4, where the reduced denominators stay manageable.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

#include "simroots/arith.hpp"

namespace simroots {

using BigRational = boost::multiprecision::cpp_rational;

// sum over p <= x of (phi(p-1)/(p-1))^k as an exact rational.
inline BigRational empirical_ak_exact_sum(u64 x, int k) {
    if (x > 10'000) throw std::domain_error("empirical_ak_exact_sum: x capped at 10^4");
    if (k < 0) throw std::domain_error("empirical_ak_exact_sum: k must be nonnegative");
    BigRational sum = 0;
    for_each_prime(2, x, [&](u64 p) {
        const u64 phi = euler_phi(factorize(p - 1));
        BigRational term = 1;
        const BigRational ratio(phi, p - 1);
        for (int i = 0; i < k; ++i) term *= ratio;
        sum += term;
    });
    return sum;
}

// M(x) = sum over p <= x of (phi(p-1)/(p-1))^2 (1-1/p)^2, exact.
inline BigRational main_term_Mx_exact(u64 x) {
    if (x > 10'000) throw std::domain_error("main_term_Mx_exact: x capped at 10^4");
    BigRational sum = 0;
    for_each_prime(2, x, [&](u64 p) {
        const u64 phi = euler_phi(factorize(p - 1));
        const BigRational ratio(phi, p - 1);
        const BigRational weight(p - 1, p);
        sum += ratio * ratio * weight * weight;
    });
    return sum;
}

}  // namespace simroots
