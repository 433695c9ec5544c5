#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "teissier/hilbert.hpp"
#include "teissier/ideal.hpp"

namespace teissier {

enum class Status { Strict, Equality, Violation };

std::string to_string(Status s);

/// Per-index outcome of an exact inequality check. A Violation on data
/// coming from genuine ideals is an implementation bug, not a finding.
struct InequalityReport {
  std::vector<Status> statuses;

  bool violated() const;
  bool all_equality() const;
};

/// The three equivalent conditions of the Minkowski equality theorem,
/// evaluated independently.
struct EqualityCertificate {
  std::optional<std::pair<mpz_class, mpz_class>> ratio;  // (r, s), reduced
  bool condition_minkowski = false;
  bool condition_geometric = false;
  bool condition_closure = false;
  bool agree = false;
  // Which orientation of (r,s) the closure test accepted: "rs", "sr",
  // "both", or "" when no ratio exists.
  std::string closure_orientation;
};

struct ReesReport {
  bool hypothesis_met = false;  // e(I) == e(J)
  mpz_class mult_sub;           // e(J)
  mpz_class mult_super;         // e(I)
  bool closures_equal = false;  // only meaningful when hypothesis_met
};

/// e_i^d <= e_0^{d-i} e_d^i for every i.
InequalityReport check_teissier_first(const MixedMultiplicities& e);

/// e_i^2 <= e_{i-1} e_{i+1} for interior i (ratio chain, cross-multiplied).
InequalityReport check_teissier_second(const MixedMultiplicities& e);

/// d = 2: e_1(I|J)^2 <= e(I) e(J).
InequalityReport check_e1_squared(const MonomialIdeal& I,
                                  const MonomialIdeal& J);

/// d = 2: e(IJ) <= 2 e(I) + 2 e(J).
InequalityReport check_double_bound(const MonomialIdeal& I,
                                    const MonomialIdeal& J);

/// d = 2, I a parameter ideal:
/// l(R/(J^n : I^[n])) <= l(R/I^[n]) + 2 l(R/J^n) - l(R/I^n J^n).
InequalityReport check_length_lemma(const MonomialIdeal& I,
                                    const MonomialIdeal& J, long n);

/// If e_i/e_{i-1} is one fixed rational r/s for all i, return (r, s) in
/// lowest terms.
std::optional<std::pair<mpz_class, mpz_class>> geometric_ratio(
    const MixedMultiplicities& e);

/// Decided exactly through the equivalence theorem; no d-th roots anywhere.
Status minkowski_status(const MonomialIdeal& I, const MonomialIdeal& J);

EqualityCertificate equality_pipeline(const MonomialIdeal& I,
                                      const MonomialIdeal& J);

/// Rees: J subset of I with e(I) = e(J) forces equal integral closures.
ReesReport check_rees(const MonomialIdeal& J, const MonomialIdeal& I);

/// d = 1: e(IJ) = e(I) + e(J).
InequalityReport check_dim1_additivity(const MonomialIdeal& I,
                                       const MonomialIdeal& J);

}  // namespace teissier
