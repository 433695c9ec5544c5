#include "teissier/milnor.hpp"

#include <algorithm>

#include "teissier/errors.hpp"

namespace teissier {

namespace {

void validate(const BrieskornPolynomial& f) {
  if (f.exponents.empty())
    throw InputError("Brieskorn data needs at least one exponent");
  for (Exp a : f.exponents)
    if (a < 2)
      throw InputError("every exponent must be >= 2 for an isolated "
                       "singularity");
}

}  // namespace

MonomialIdeal jacobian_ideal(const BrieskornPolynomial& f) {
  validate(f);
  const int d = static_cast<int>(f.exponents.size());
  std::vector<ExponentVector> gens;
  for (int i = 0; i < d; ++i) {
    ExponentVector g(d, 0);
    g[i] = f.exponents[i] - 1;
    gens.push_back(std::move(g));
  }
  return normalize(d, std::move(gens));
}

mpz_class milnor_number(const BrieskornPolynomial& f) {
  return colength(jacobian_ideal(f));
}

MilnorSpectrum sectional_milnor(const BrieskornPolynomial& f) {
  MonomialIdeal J = jacobian_ideal(f);
  MixedMultiplicities mm = mixed_multiplicities(maximal_ideal(J.dim), J);
  return MilnorSpectrum{std::move(mm.e)};
}

void check_low_sections(const MilnorSpectrum& sp,
                        const BrieskornPolynomial& f) {
  validate(f);
  if (sp.mu.size() != f.exponents.size() + 1)
    throw InputError("spectrum length does not match exponent list");
  if (sp.mu[0] != 1)
    throw TheoremViolation("mu^(0) must be 1");
  const Exp min_a = *std::min_element(f.exponents.begin(), f.exponents.end());
  if (sp.mu[1] != min_a - 1)
    throw TheoremViolation("mu^(1) must equal the hypersurface multiplicity "
                           "minus one");
}

InequalityReport check_log_convexity(const MilnorSpectrum& sp) {
  for (const auto& v : sp.mu)
    if (v < 1) throw InputError("spectrum entries must be positive");
  InequalityReport rep;
  for (std::size_t i = 1; i + 1 < sp.mu.size(); ++i) {
    const mpz_class lhs = sp.mu[i] * sp.mu[i];
    const mpz_class rhs = sp.mu[i - 1] * sp.mu[i + 1];
    rep.statuses.push_back(lhs < rhs    ? Status::Strict
                           : lhs == rhs ? Status::Equality
                                        : Status::Violation);
  }
  return rep;
}

mpz_class euler_characteristic_sum(const MilnorSpectrum& sp) {
  // Spectrum has n+2 entries; the sum runs over mu^0..mu^n.
  mpz_class acc = 0;
  for (std::size_t i = 0; i + 1 < sp.mu.size(); ++i)
    acc += (i % 2 == 0) ? sp.mu[i] : -sp.mu[i];
  return acc;
}

}  // namespace teissier
