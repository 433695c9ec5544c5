#include "teissier/theorems.hpp"

#include <algorithm>

#include "teissier/errors.hpp"
#include "teissier/linalg.hpp"
#include "teissier/newton.hpp"

namespace teissier {

std::string to_string(Status s) {
  switch (s) {
    case Status::Strict:
      return "strict";
    case Status::Equality:
      return "equality";
    default:
      return "VIOLATION";
  }
}

bool InequalityReport::violated() const {
  return std::any_of(statuses.begin(), statuses.end(),
                     [](Status s) { return s == Status::Violation; });
}

bool InequalityReport::all_equality() const {
  return std::all_of(statuses.begin(), statuses.end(),
                     [](Status s) { return s == Status::Equality; });
}

namespace {

Status compare(const mpz_class& lhs, const mpz_class& rhs) {
  if (lhs < rhs) return Status::Strict;
  if (lhs == rhs) return Status::Equality;
  return Status::Violation;
}

mpz_class ipow(const mpz_class& base, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void require_sequence(const MixedMultiplicities& e) {
  if (static_cast<int>(e.e.size()) != e.dim + 1)
    throw InputError("mixed multiplicity sequence has wrong length");
  for (const auto& v : e.e)
    if (v < 1) throw InputError("mixed multiplicities must be positive");
}

}  // namespace

InequalityReport check_teissier_first(const MixedMultiplicities& e) {
  require_sequence(e);
  const int d = e.dim;
  InequalityReport rep;
  for (int i = 0; i <= d; ++i)
    rep.statuses.push_back(compare(ipow(e.e[i], d),
                                   ipow(e.e[0], d - i) * ipow(e.e[d], i)));
  return rep;
}

InequalityReport check_teissier_second(const MixedMultiplicities& e) {
  require_sequence(e);
  InequalityReport rep;
  for (int i = 1; i < e.dim; ++i)
    rep.statuses.push_back(compare(e.e[i] * e.e[i], e.e[i - 1] * e.e[i + 1]));
  return rep;
}

InequalityReport check_e1_squared(const MonomialIdeal& I,
                                  const MonomialIdeal& J) {
  if (I.dim != 2 || J.dim != 2)
    throw InputError("check_e1_squared requires dimension 2");
  MixedMultiplicities e = mixed_multiplicities(I, J);
  InequalityReport rep;
  rep.statuses.push_back(compare(e.e[1] * e.e[1], e.e[0] * e.e[2]));
  return rep;
}

InequalityReport check_double_bound(const MonomialIdeal& I,
                                    const MonomialIdeal& J) {
  if (I.dim != 2 || J.dim != 2)
    throw InputError("check_double_bound requires dimension 2");
  mpz_class lhs = multiplicity(product(I, J));
  mpz_class rhs = 2 * multiplicity(I) + 2 * multiplicity(J);
  InequalityReport rep;
  rep.statuses.push_back(compare(lhs, rhs));
  return rep;
}

InequalityReport check_length_lemma(const MonomialIdeal& I,
                                    const MonomialIdeal& J, long n) {
  if (I.dim != 2 || J.dim != 2)
    throw InputError("check_length_lemma requires dimension 2");
  if (!is_parameter_ideal(I))
    throw InputError("check_length_lemma requires a parameter ideal I");
  if (!is_m_primary(J))
    throw InputError("check_length_lemma requires m-primary J");
  if (n < 1) throw InputError("n must be >= 1");

  MonomialIdeal In = frobenius_power(I, n);
  MonomialIdeal Jn = power(J, n);
  mpz_class lhs = colength(colon(Jn, In));
  mpz_class rhs = colength(In) + 2 * colength(Jn) -
                  colength(product(power(I, n), Jn));
  InequalityReport rep;
  rep.statuses.push_back(compare(lhs, rhs));
  return rep;
}

std::optional<std::pair<mpz_class, mpz_class>> geometric_ratio(
    const MixedMultiplicities& e) {
  require_sequence(e);
  mpq_class ratio(e.e[1], e.e[0]);
  ratio.canonicalize();
  for (int i = 2; i <= e.dim; ++i) {
    mpq_class next(e.e[i], e.e[i - 1]);
    next.canonicalize();
    if (next != ratio) return std::nullopt;
  }
  return std::make_pair(ratio.get_num(), ratio.get_den());
}

namespace {

Status minkowski_status_for(const MonomialIdeal& I, const MonomialIdeal& J,
                            const MixedMultiplicities& e) {
  const int d = e.dim;

  // e(IJ) = sum C(d,i) e_i must hold on the nose.
  mpz_class expansion = 0;
  for (int i = 0; i <= d; ++i)
    expansion += binomial(mpz_class(d), static_cast<unsigned>(i)) * e.e[i];
  if (multiplicity(product(I, J)) != expansion)
    throw TheoremViolation("e(IJ) disagrees with the mixed expansion");

  if (check_teissier_first(e).violated())
    throw TheoremViolation("Teissier bound failed on an ideal-derived "
                           "sequence");

  return geometric_ratio(e) ? Status::Equality : Status::Strict;
}

}  // namespace

Status minkowski_status(const MonomialIdeal& I, const MonomialIdeal& J) {
  return minkowski_status_for(I, J, mixed_multiplicities(I, J));
}

EqualityCertificate equality_pipeline(const MonomialIdeal& I,
                                      const MonomialIdeal& J) {
  EqualityCertificate cert;
  MixedMultiplicities e = mixed_multiplicities(I, J);
  cert.ratio = geometric_ratio(e);
  cert.condition_geometric = cert.ratio.has_value();
  cert.condition_minkowski =
      (minkowski_status_for(I, J, e) == Status::Equality);

  if (cert.ratio) {
    const long r = static_cast<long>(cert.ratio->first.get_si());
    const long s = static_cast<long>(cert.ratio->second.get_si());
    const bool rs = scaled_closure_equal(I, r, J, s);
    const bool sr = scaled_closure_equal(I, s, J, r);
    cert.condition_closure = rs || sr;
    cert.closure_orientation = rs ? (sr ? "both" : "rs") : (sr ? "sr" : "");
  }

  cert.agree = (cert.condition_minkowski == cert.condition_geometric) &&
               (cert.condition_geometric == cert.condition_closure);
  if (!cert.agree)
    throw TheoremViolation(
        "Minkowski equality conditions disagree on an ideal-derived pair");
  return cert;
}

ReesReport check_rees(const MonomialIdeal& J, const MonomialIdeal& I) {
  if (J.dim != I.dim) throw InputError("dimension mismatch");
  if (!contains_ideal(I, J))
    throw InputError("check_rees requires J to be contained in I");
  ReesReport rep;
  rep.mult_sub = multiplicity(J);
  rep.mult_super = multiplicity(I);
  rep.hypothesis_met = (rep.mult_sub == rep.mult_super);
  if (rep.hypothesis_met)
    rep.closures_equal = (integral_closure(I) == integral_closure(J));
  return rep;
}

InequalityReport check_dim1_additivity(const MonomialIdeal& I,
                                       const MonomialIdeal& J) {
  if (I.dim != 1 || J.dim != 1)
    throw InputError("check_dim1_additivity requires dimension 1");
  mpz_class lhs = multiplicity(product(I, J));
  mpz_class rhs = multiplicity(I) + multiplicity(J);
  InequalityReport rep;
  rep.statuses.push_back(lhs == rhs ? Status::Equality : Status::Violation);
  return rep;
}

}  // namespace teissier
