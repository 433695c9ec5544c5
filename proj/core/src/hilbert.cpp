#include "teissier/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "teissier/errors.hpp"
#include "teissier/linalg.hpp"

namespace teissier {

namespace {

// Memoized powers of a fixed base ideal; interpolation grids revisit
// neighbouring exponents constantly.
class PowerCache {
 public:
  explicit PowerCache(MonomialIdeal base) : base_(std::move(base)) {}

  const MonomialIdeal& get(long n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    MonomialIdeal value;
    if (n == 0)
      value = unit_ideal(base_.dim);
    else if (n == 1)
      value = base_;
    else
      // multiply by the (small) base rather than squaring: the candidate
      // set stays #gens(I^{n-1}) x #gens(I) instead of quadratic in both
      value = product(get(n - 1), base_);
    return cache_.emplace(n, std::move(value)).first->second;
  }

 private:
  MonomialIdeal base_;
  std::map<long, MonomialIdeal> cache_;
};

Exp max_coord_sum(const MonomialIdeal& I) {
  Exp best = 0;
  for (const auto& g : I.gens) {
    Exp s = 0;
    for (Exp e : g) s += e;
    best = std::max(best, s);
  }
  return best;
}

void require_m_primary(const MonomialIdeal& I, const char* what) {
  if (is_unit_ideal(I) || !is_m_primary(I))
    throw InputError(std::string(what) +
                     " requires a proper m-primary ideal");
}

mpz_class pow_mpz(long base, int exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

std::string join_coeffs(const std::vector<mpq_class>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i].get_str();
  return os.str();
}

constexpr long kDoublingCap = 1LL << 10;

}  // namespace

mpz_class HilbertPolynomial::evaluate(const mpz_class& n) const {
  mpz_class acc = 0;
  for (int i = 0; i <= dim; ++i) {
    mpz_class term = e[i] * binomial(n + dim - 1 - i, dim - i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

mpq_class BhattacharyaPolynomial::evaluate(const mpz_class& r,
                                           const mpz_class& s) const {
  mpq_class acc = 0;
  for (const auto& [jk, c] : coeffs) {
    mpz_class rp, sp;
    mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(),
               static_cast<unsigned long>(jk.first));
    mpz_pow_ui(sp.get_mpz_t(), s.get_mpz_t(),
               static_cast<unsigned long>(jk.second));
    acc += c * mpq_class(rp * sp);
  }
  return acc;
}

mpq_class BhattacharyaPolynomial::coefficient(int j, int k) const {
  auto it = coeffs.find({j, k});
  return it == coeffs.end() ? mpq_class(0) : it->second;
}

mpz_class hilbert_function(const MonomialIdeal& I, long n) {
  require_m_primary(I, "hilbert_function");
  return colength(power(I, n));
}

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& I) {
  require_m_primary(I, "hilbert_polynomial");
  const int d = I.dim;
  const long n0 = d * (1 + max_coord_sum(I));
  const long cap = kDoublingCap * n0;

  PowerCache pc(I);
  auto fit_at = [&](long N) {
    std::vector<std::vector<mpz_class>> A(d + 1);
    std::vector<mpz_class> b(d + 1);
    for (int row = 0; row <= d; ++row) {
      const long n = N + row;
      for (int i = 0; i <= d; ++i) {
        mpz_class c = binomial(mpz_class(static_cast<long>(n + d - 1 - i)),
                               d - i);
        A[row].push_back(i % 2 == 0 ? c : -c);
      }
      b[row] = colength(pc.get(n));
    }
    return solve_integer_system(std::move(A), std::move(b));
  };

  std::vector<mpq_class> prev;
  long prev_n = 0;
  for (long N = n0; N <= cap; N *= 2) {
    std::vector<mpq_class> cand = fit_at(N);
    if (!prev.empty() && cand == prev) {
      bool verified = true;
      for (int j = 1; j <= d + 2 && verified; ++j) {
        const long n = N + d + j;
        mpq_class val = 0;
        for (int i = 0; i <= d; ++i) {
          mpq_class t =
              cand[i] *
              mpq_class(binomial(mpz_class(static_cast<long>(n + d - 1 - i)),
                                 d - i));
          val += (i % 2 == 0) ? t : -t;
        }
        verified = (val == mpq_class(colength(pc.get(n))));
      }
      if (verified) {
        HilbertPolynomial P;
        P.dim = d;
        P.threshold = prev_n;
        for (const auto& c : cand) {
          if (c.get_den() != 1)
            throw TheoremViolation(
                "Hilbert coefficients must be integers; got " + c.get_str());
          P.e.push_back(c.get_num());
        }
        if (P.e[0] < 1)
          throw TheoremViolation("multiplicity must be positive");
        return P;
      }
    }
    prev = std::move(cand);
    prev_n = N;
  }
  throw StabilizationError(
      "hilbert_polynomial did not stabilize below cap; last candidates: [" +
      join_coeffs(prev) + "]");
}

mpz_class multiplicity(const MonomialIdeal& I) {
  return hilbert_polynomial(I).e[0];
}

mpz_class bhattacharya_function(const MonomialIdeal& I, const MonomialIdeal& J,
                                long r, long s) {
  if (I.dim != J.dim) throw InputError("dimension mismatch");
  require_m_primary(I, "bhattacharya_function");
  require_m_primary(J, "bhattacharya_function");
  return colength(product(power(I, r), power(J, s)));
}

BhattacharyaPolynomial bhattacharya_polynomial(const MonomialIdeal& I,
                                               const MonomialIdeal& J) {
  if (I.dim != J.dim) throw InputError("dimension mismatch");
  require_m_primary(I, "bhattacharya_polynomial");
  require_m_primary(J, "bhattacharya_polynomial");
  const int d = I.dim;
  const long n0 =
      d * (1 + std::max(max_coord_sum(I), max_coord_sum(J)));
  const long cap = kDoublingCap * n0;

  // Monomial exponents (j,k), j+k <= d, in a fixed order.
  std::vector<std::pair<int, int>> monos;
  for (int j = d; j >= 0; --j)
    for (int k = 0; j + k <= d; ++k) monos.emplace_back(j, k);

  // I^r J^s = (IJ)^m I^{r-m} J^{s-m} with m = min(r,s): one cached power
  // of IJ times a small leftover power, never a product of two big ideals.
  PowerCache pcI(I), pcJ(J), pcIJ(product(I, J));
  auto sample = [&](long r, long s) {
    const long m = std::min(r, s);
    if (r == s) return colength(pcIJ.get(m));
    const MonomialIdeal& rest = r > s ? pcI.get(r - m) : pcJ.get(s - m);
    if (m == 0) return colength(rest);
    return colength(product(pcIJ.get(m), rest));
  };

  auto fit_at = [&](long N) {
    std::vector<std::vector<mpz_class>> A;
    std::vector<mpz_class> b;
    for (int a = 0; a <= d; ++a)
      for (int bb = 0; a + bb <= d; ++bb) {
        std::vector<mpz_class> row;
        for (auto [j, k] : monos)
          row.push_back(pow_mpz(N + a, j) * pow_mpz(N + bb, k));
        A.push_back(std::move(row));
        b.push_back(sample(N + a, N + bb));
      }
    return solve_integer_system(std::move(A), std::move(b));
  };

  std::vector<mpq_class> prev;
  long prev_n = 0;
  for (long N = n0; N <= cap; N *= 2) {
    std::vector<mpq_class> cand = fit_at(N);
    if (!prev.empty() && cand == prev) {
      BhattacharyaPolynomial P;
      P.dim = d;
      P.threshold = prev_n;
      for (std::size_t t = 0; t < monos.size(); ++t)
        if (cand[t] != 0) P.coeffs[monos[t]] = cand[t];
      bool verified = true;
      const long base = N + d;
      for (int j = 0; j <= d + 1 && verified; ++j) {
        const long n = base + 1 + j;
        const mpz_class nz(static_cast<long>(n));
        verified = (P.evaluate(nz, nz) == mpq_class(sample(n, n)));
      }
      if (verified) {
        bool top = false;
        for (int i = 0; i <= d; ++i)
          if (P.coefficient(d - i, i) > 0) top = true;
        if (!top) throw TheoremViolation("Bhattacharya degree dropped below d");
        return P;
      }
    }
    prev = std::move(cand);
    prev_n = N;
  }
  throw StabilizationError(
      "bhattacharya_polynomial did not stabilize below cap; last candidates: "
      "[" + join_coeffs(prev) + "]");
}

namespace {

MixedMultiplicities extract_mixed(int d, const std::vector<mpq_class>& raw,
                                  const char* route) {
  MixedMultiplicities mm;
  mm.dim = d;
  for (int i = 0; i <= d; ++i) {
    const mpq_class& v = raw[i];
    if (v.get_den() != 1 || v.get_num() < 1)
      throw TheoremViolation(std::string(route) +
                             ": mixed multiplicity e_" + std::to_string(i) +
                             " = " + v.get_str() +
                             " is not a positive integer");
    mm.e.push_back(v.get_num());
  }
  return mm;
}

}  // namespace

MixedMultiplicities mixed_multiplicities(const MonomialIdeal& I,
                                         const MonomialIdeal& J) {
  BhattacharyaPolynomial P = bhattacharya_polynomial(I, J);
  const int d = P.dim;
  const mpz_class dfac = factorial(static_cast<unsigned>(d));
  std::vector<mpq_class> raw;
  for (int i = 0; i <= d; ++i) {
    mpq_class scale(dfac, binomial(mpz_class(d), static_cast<unsigned>(i)));
    scale.canonicalize();
    raw.push_back(scale * P.coefficient(d - i, i));
  }
  return extract_mixed(d, raw, "bhattacharya extraction");
}

MixedMultiplicities mixed_via_vandermonde(const MonomialIdeal& I,
                                          const MonomialIdeal& J) {
  if (I.dim != J.dim) throw InputError("dimension mismatch");
  const int d = I.dim;
  // e(I J^k) = sum_i C(d,i) e_i k^i for k = 0..d.
  std::vector<std::vector<mpz_class>> A;
  std::vector<mpz_class> b;
  for (int k = 0; k <= d; ++k) {
    std::vector<mpz_class> row;
    for (int i = 0; i <= d; ++i) row.push_back(pow_mpz(k, i));
    A.push_back(std::move(row));
    b.push_back(multiplicity(product(I, power(J, k))));
  }
  std::vector<mpq_class> u = solve_integer_system(std::move(A), std::move(b));
  std::vector<mpq_class> raw;
  for (int i = 0; i <= d; ++i) {
    mpq_class e =
        u[i] / mpq_class(binomial(mpz_class(d), static_cast<unsigned>(i)));
    e.canonicalize();
    raw.push_back(e);
  }
  return extract_mixed(d, raw, "vandermonde extraction");
}

bool is_parameter_ideal(const MonomialIdeal& I) {
  return static_cast<int>(I.gens.size()) == I.dim && is_m_primary(I) &&
         !is_unit_ideal(I);
}

mpq_class lech_ratio(const MonomialIdeal& I, long n) {
  if (!is_parameter_ideal(I))
    throw InputError("lech_ratio requires a parameter ideal");
  if (n < 1) throw InputError("lech_ratio requires n >= 1");
  mpz_class nd;
  mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(I.dim));
  mpq_class r(colength(frobenius_power(I, n)), nd);
  r.canonicalize();
  return r;
}

}  // namespace teissier
