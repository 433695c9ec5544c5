#pragma once

#include <gmpxx.h>

#include <vector>

namespace teissier {

mpz_class factorial(unsigned n);

/// C(n, k) for possibly negative or large n, exact.
mpz_class binomial(const mpz_class& n, unsigned k);

/// Solve A x = b exactly for square integer A via fraction-free (Bareiss)
/// elimination. Throws InputError on a singular system.
std::vector<mpq_class> solve_integer_system(
    std::vector<std::vector<mpz_class>> A, std::vector<mpz_class> b);

}  // namespace teissier
