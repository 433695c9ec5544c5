#pragma once

#include <gmpxx.h>

#include <vector>

#include "teissier/hilbert.hpp"
#include "teissier/ideal.hpp"
#include "teissier/theorems.hpp"

namespace teissier {

/// f = x_0^{a_0} + ... + x_n^{a_n}, unit coefficients, every a_i >= 2 so the
/// origin is an isolated singularity.
struct BrieskornPolynomial {
  std::vector<Exp> exponents;
};

/// mu^(0), ..., mu^(d) with d = n+1.
struct MilnorSpectrum {
  std::vector<mpz_class> mu;
};

/// (x_0^{a_0-1}, ..., x_n^{a_n-1}): the partial derivatives up to scalars.
MonomialIdeal jacobian_ideal(const BrieskornPolynomial& f);

/// colength of the Jacobian ideal; equals prod(a_i - 1).
mpz_class milnor_number(const BrieskornPolynomial& f);

/// mu^(i) = e_i(m | J(f)).
MilnorSpectrum sectional_milnor(const BrieskornPolynomial& f);

/// mu^(0) = 1 and mu^(1) = min(a_i) - 1; a failure is a bug.
void check_low_sections(const MilnorSpectrum& sp,
                        const BrieskornPolynomial& f);

/// mu^(i)^2 <= mu^(i-1) mu^(i+1) for interior i.
InequalityReport check_log_convexity(const MilnorSpectrum& sp);

/// Formal alternating sum mu^0 - mu^1 + ... over the first n+1 entries.
mpz_class euler_characteristic_sum(const MilnorSpectrum& sp);

}  // namespace teissier
