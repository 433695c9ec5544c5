// Acceptance suite: one line per criterion, exact comparisons throughout.
#include <chrono>
#include <iostream>
#include <random>
#include <thread>
#include <vector>

#include "teissier/hilbert.hpp"
#include "teissier/ideal.hpp"
#include "teissier/milnor.hpp"
#include "teissier/newton.hpp"
#include "teissier/sweep.hpp"
#include "teissier/theorems.hpp"

using namespace teissier;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << what << "\n";
  if (!ok) ++failures;
}

MonomialIdeal ideal(int dim, std::vector<ExponentVector> gens) {
  return normalize(dim, std::move(gens));
}

mpz_class ipow(const mpz_class& b, int k) {
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

bool criterion_colength_oracle() {
  std::mt19937_64 rng(1001);
  const auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < 500; ++k) {
    const int dim = 1 + k % 3;
    MonomialIdeal I = random_m_primary(rng, dim, 6);
    if (colength(I, ColengthMode::Sliced) !=
        colength(I, ColengthMode::BruteForce))
      return false;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return elapsed < std::chrono::seconds(60);
}

bool criterion_double_extraction() {
  MonomialIdeal m = maximal_ideal(2);
  MixedMultiplicities pinned = mixed_multiplicities(m, ideal(2, {{2, 0}, {0, 3}}));
  if (pinned.e != std::vector<mpz_class>{1, 2, 6}) return false;
  std::mt19937_64 rng(1002);
  for (int k = 0; k < 100; ++k) {
    MonomialIdeal I = random_m_primary(rng, 2, 5);
    MonomialIdeal J = random_m_primary(rng, 2, 5);
    if (mixed_multiplicities(I, J) != mixed_via_vandermonde(I, J))
      return false;
  }
  return true;
}

bool criterion_lemma_suite() {
  const MonomialIdeal m = maximal_ideal(2);
  const std::vector<std::pair<MonomialIdeal, MonomialIdeal>> corpus = {
      {m, ideal(2, {{2, 0}, {0, 3}})},
      {ideal(2, {{2, 0}, {1, 1}, {0, 3}}), ideal(2, {{1, 0}, {0, 2}})},
      {ideal(2, {{3, 0}, {1, 1}, {0, 2}}), ideal(2, {{2, 0}, {0, 2}})},
  };
  for (const auto& [I, J] : corpus) {
    const int d = I.dim;
    MixedMultiplicities e = mixed_multiplicities(I, J);
    // (1) endpoints
    if (e.e.front() != multiplicity(I) || e.e.back() != multiplicity(J))
      return false;
    // (2) expansion identity on the (r,s) grid {0,1,2}^2
    const long binom[] = {1, 2, 1};
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s) {
        if (r == 0 && s == 0) continue;
        mpz_class want = 0;
        for (int i = 0; i <= d; ++i)
          want += binom[i] * e.e[i] * ipow(r, d - i) * ipow(s, i);
        if (multiplicity(product(power(I, r), power(J, s))) != want)
          return false;
      }
    // (3) scaling
    for (long p = 1; p <= 3; ++p)
      for (long q = 1; q <= 3; ++q) {
        MixedMultiplicities sc = mixed_multiplicities(power(I, p), power(J, q));
        for (int i = 0; i <= d; ++i)
          if (sc.e[i] != ipow(p, d - i) * ipow(q, i) * e.e[i]) return false;
      }
    // (4) diagonal
    for (const auto& v : mixed_multiplicities(I, I).e)
      if (v != multiplicity(I)) return false;
    // (5) reduction invariance through the integral closure
    if (mixed_multiplicities(integral_closure(I), integral_closure(J)) != e)
      return false;
  }
  return true;
}

bool criterion_sweep_theorems() {
  SweepOptions opts;
  opts.seed = 20240101;
  opts.count = 200;
  opts.dim = 2;
  opts.max_exp = 5;
  SweepResult res = run_sweep(opts);
  if (!res.ok) return false;
  const auto& passed = res.report["checks_passed"];
  return passed["teissier-1"] == 200 && passed["teissier-2"] == 200 &&
         passed["e1-squared"] == 200;
}

bool criterion_equality() {
  const MonomialIdeal bases[] = {
      maximal_ideal(2),
      ideal(2, {{1, 0}, {0, 2}}),
      ideal(2, {{2, 0}, {0, 3}}),
  };
  for (const auto& K : bases)
    for (long a = 1; a <= 3; ++a)
      for (long b = 1; b <= 3; ++b) {
        EqualityCertificate cert = equality_pipeline(power(K, a), power(K, b));
        if (!cert.agree || !cert.condition_minkowski || !cert.ratio)
          return false;
        mpz_class g = gcd(mpz_class(a), mpz_class(b));
        if (cert.ratio->first != b / g || cert.ratio->second != a / g)
          return false;
        if (minkowski_status(power(K, a), power(K, b)) != Status::Equality)
          return false;
      }
  EqualityCertificate strict =
      equality_pipeline(maximal_ideal(2), ideal(2, {{2, 0}, {0, 3}}));
  return strict.agree && !strict.condition_minkowski &&
         !strict.condition_geometric && !strict.condition_closure;
}

bool criterion_rees() {
  ReesReport pinned = check_rees(ideal(2, {{2, 0}, {0, 2}}),
                                 power(maximal_ideal(2), 2));
  if (!pinned.hypothesis_met || !pinned.closures_equal) return false;
  std::mt19937_64 rng(1006);
  int exercised = 0;
  for (int k = 0; k < 40; ++k) {
    const int dim = 1 + k % 3;
    MonomialIdeal J = random_m_primary(rng, dim, 4);
    // enlarge J by a closure point: containment holds and e is preserved
    MonomialIdeal C = integral_closure(J);
    MonomialIdeal I = C.gens.size() > J.gens.size()
                          ? normalize(dim, [&] {
                              auto g = J.gens;
                              g.push_back(C.gens[rng() % C.gens.size()]);
                              return g;
                            }())
                          : J;
    if (!contains_ideal(I, J)) return false;
    ReesReport r = check_rees(J, I);
    if (multiplicity(I) == multiplicity(J)) {
      if (!r.hypothesis_met || !r.closures_equal) return false;
      ++exercised;
    }
  }
  return exercised > 0;
}

bool criterion_section6() {
  const MonomialIdeal m = maximal_ideal(2);
  const MonomialIdeal I23 = ideal(2, {{2, 0}, {0, 3}});
  for (long n = 1; n <= 4; ++n) {
    if (check_length_lemma(m, m, n).violated()) return false;
    if (check_length_lemma(m, I23, n).violated()) return false;
    if (check_length_lemma(I23, ideal(2, {{2, 0}, {1, 1}, {0, 3}}), n)
            .violated())
      return false;
  }
  std::mt19937_64 rng(1007);
  for (int k = 0; k < 30; ++k) {
    MonomialIdeal I = random_m_primary(rng, 2, 5);
    MonomialIdeal J = random_m_primary(rng, 2, 5);
    if (check_double_bound(I, J).violated()) return false;
  }
  const MonomialIdeal params[] = {
      ideal(1, {{3}}),
      ideal(2, {{2, 0}, {0, 3}}),
      ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}),
  };
  for (const auto& P : params) {
    mpz_class e = multiplicity(P);
    for (long n = 1; n <= 5; ++n)
      if (lech_ratio(P, n) != e) return false;
  }
  return true;
}

bool criterion_milnor() {
  MilnorSpectrum pinned = sectional_milnor({{3, 3}});
  if (pinned.mu != std::vector<mpz_class>{1, 2, 4}) return false;
  std::vector<std::vector<Exp>> lists;
  for (Exp a = 2; a <= 6; ++a) {
    lists.push_back({a});
    for (Exp b = 2; b <= 6; ++b) {
      lists.push_back({a, b});
      for (Exp c = 2; c <= 6; ++c) lists.push_back({a, b, c});
    }
  }
  for (const auto& exps : lists) {
    BrieskornPolynomial f{exps};
    mpz_class prod = 1;
    Exp amin = exps[0];
    for (Exp a : exps) {
      prod *= (a - 1);
      amin = std::min(amin, a);
    }
    if (milnor_number(f) != prod) return false;
    MilnorSpectrum s = sectional_milnor(f);
    if (s.mu.back() != prod) return false;
    if (s.mu[0] != 1 || s.mu[1] != amin - 1) return false;
    check_low_sections(s, f);
    if (check_log_convexity(s).violated()) return false;
  }
  return true;
}

bool criterion_covolume() {
  std::mt19937_64 rng(1009);
  for (int k = 0; k < 60; ++k) {
    MonomialIdeal I = random_m_primary(rng, 2, 6);
    if (multiplicity(I) != 2 * covolume_2d(I)) return false;
  }
  return true;
}

bool criterion_determinism() {
  SweepOptions opts;
  opts.seed = 77;
  opts.count = 60;
  opts.dim = 2;
  opts.max_exp = 5;
  opts.threads = 1;
  const std::string single = run_sweep(opts).report.dump();
  opts.threads = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  const std::string maxed = run_sweep(opts).report.dump();
  const std::string again = run_sweep(opts).report.dump();
  return single == maxed && maxed == again;
}

}  // namespace

int main() {
  report(1, "colength sliced/bruteforce oracle, 500 random ideals, < 60 s",
         criterion_colength_oracle());
  report(2, "mixed-multiplicity double extraction, 100 pairs + pinned triple",
         criterion_double_extraction());
  report(3, "lemma suite: endpoints, expansion, scaling, diagonal, closure",
         criterion_lemma_suite());
  report(4, "fixed-seed sweep of 200 pairs, zero inequality violations",
         criterion_sweep_theorems());
  report(5, "equality theorem on power families and the pinned strict pair",
         criterion_equality());
  report(6, "Rees theorem on contained equal-multiplicity pairs",
         criterion_rees());
  report(7, "length lemma, double bound, Lech ratios",
         criterion_section6());
  report(8, "Milnor suite over all exponent lists with entries <= 6, n <= 2",
         criterion_milnor());
  report(9, "planar multiplicity equals twice the covolume",
         criterion_covolume());
  report(10, "sweep reports byte-identical across runs and thread counts",
         criterion_determinism());
  return failures == 0 ? 0 : 1;
}
