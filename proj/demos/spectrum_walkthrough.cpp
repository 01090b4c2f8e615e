// Walks the library end to end for one prime: context, spectrum, density
// ratio, and the exact four-term reconstruction of the tuple count.

#include <cstdio>

#include "simroots/simroots.hpp"

using namespace simroots;

int main() {
    const u64 p = 97;
    const IntPolynomial f = parse_poly("t^2+1");

    const PrimeContext ctx = least_primitive_root(p);
    std::printf("p = %llu, tau = %llu, phi(p-1) = %llu\n", (unsigned long long)p,
                (unsigned long long)ctx.tau, (unsigned long long)ctx.phi_p_minus_1);

    const TupleSpectrum spec = simultaneous_spectrum(p, {f});
    std::printf("simultaneous pairs (%llu of %zu primitive roots):\n",
                (unsigned long long)spec.tuple_count, spec.rows.size());
    for (const SpectrumRow& row : spec.rows)
        if (row.is_tuple)
            std::printf("  z = %llu, f(z) = %llu\n", (unsigned long long)row.z,
                        (unsigned long long)row.values[0]);

    const Rational main = main_term_Mfp(ctx, MainTermMode::asymptotic);
    std::printf("main term (phi/(p-1))^2 p = %s ~ %.4f, empirical ratio %.4f\n",
                main.to_string().c_str(), main.to_double(), empirical_cfp(ctx, f));

    const DecompositionReport rep = decomposition_check(ctx, f);
    std::printf("M + E0 + E1 + E2 = %s + %s + %s + %s = %s (N = %llu, exact: %s)\n",
                rep.main.to_string().c_str(), rep.e0.to_string().c_str(),
                rep.e1.to_string().c_str(), rep.e2.to_string().c_str(),
                rep.total.to_string().c_str(), (unsigned long long)rep.tuple_count,
                rep.exact_match ? "yes" : "no");
    return 0;
}
