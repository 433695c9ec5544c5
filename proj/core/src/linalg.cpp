#include "teissier/linalg.hpp"

#include "teissier/errors.hpp"

namespace teissier {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(const mpz_class& n, unsigned k) {
  mpz_class r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

std::vector<mpq_class> solve_integer_system(
    std::vector<std::vector<mpz_class>> A, std::vector<mpz_class> b) {
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);

  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && A[piv][k] == 0) ++piv;
    if (piv == n) throw InputError("singular linear system");
    if (piv != k) std::swap(A[piv], A[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        mpz_class num = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        mpz_divexact(A[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      A[i][k] = 0;
    }
    prev = A[k][k];
  }

  std::vector<mpq_class> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    mpq_class acc = A[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= mpq_class(A[ii][j]) * x[j];
    x[ii] = acc / mpq_class(A[ii][ii]);
    x[ii].canonicalize();
  }
  return x;
}

}  // namespace teissier
