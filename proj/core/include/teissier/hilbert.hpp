#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "teissier/ideal.hpp"

namespace teissier {

/// P(x) = sum_i (-1)^i e_i C(x+d-1-i, d-i), the univariate Hilbert
/// polynomial in the binomial basis, with the probe-certified threshold.
struct HilbertPolynomial {
  int dim = 0;
  std::vector<mpz_class> e;  // e_0, ..., e_d
  long threshold = 0;

  mpz_class evaluate(const mpz_class& n) const;
};

/// Bivariate polynomial of total degree <= d in the monomial basis,
/// P(r,s) = sum c_{jk} r^j s^k, equal to l(R/I^r J^s) beyond the threshold.
struct BhattacharyaPolynomial {
  int dim = 0;
  std::map<std::pair<int, int>, mpq_class> coeffs;  // (j,k) -> c_{jk}
  long threshold = 0;

  mpq_class evaluate(const mpz_class& r, const mpz_class& s) const;
  mpq_class coefficient(int j, int k) const;
};

struct MixedMultiplicities {
  int dim = 0;
  std::vector<mpz_class> e;  // e_0(I|J), ..., e_d(I|J)

  bool operator==(const MixedMultiplicities&) const = default;
};

/// l(R/I^n)
mpz_class hilbert_function(const MonomialIdeal& I, long n);

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& I);

/// e(I): the normalized leading coefficient e_0.
mpz_class multiplicity(const MonomialIdeal& I);

/// l(R/I^r J^s)
mpz_class bhattacharya_function(const MonomialIdeal& I, const MonomialIdeal& J,
                                long r, long s);

BhattacharyaPolynomial bhattacharya_polynomial(const MonomialIdeal& I,
                                               const MonomialIdeal& J);

/// e_i(I|J) extracted from the top-degree Bhattacharya coefficients.
MixedMultiplicities mixed_multiplicities(const MonomialIdeal& I,
                                         const MonomialIdeal& J);

/// Independent route: e(I J^k) for k = 0..d solved through a Vandermonde
/// system. Oracle for mixed_multiplicities.
MixedMultiplicities mixed_via_vandermonde(const MonomialIdeal& I,
                                          const MonomialIdeal& J);

/// l(R/I^[n]) / n^d for a parameter ideal; equals e(I) for every n here.
mpq_class lech_ratio(const MonomialIdeal& I, long n);

/// Parameter ideal: exactly d generators, m-primary (hence all pure powers).
bool is_parameter_ideal(const MonomialIdeal& I);

}  // namespace teissier
