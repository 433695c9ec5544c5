#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace teissier {

/// Exponent of a single variable. Coordinates stay small (bounded by the
/// largest input exponent times the largest probed power); lattice-point
/// counts and polynomial coefficients, which do grow, use mpz_class.
using Exp = long;

/// A point of N^d encoding the monomial x^p.
using ExponentVector = std::vector<Exp>;

/// componentwise p <= q
bool divides(const ExponentVector& p, const ExponentVector& q);

/// An m-primary-capable monomial ideal in k[x_1..x_d]: the ambient dimension
/// plus a minimal (antichain) generating set, kept sorted for canonical
/// equality. Construct through normalize(); the raw constructor is for
/// internal use on data already known to be an antichain.
struct MonomialIdeal {
  int dim = 0;
  std::vector<ExponentVector> gens;

  bool operator==(const MonomialIdeal&) const = default;
};

/// Antichain of <=-minimal elements of raw_gens, sorted lexicographically.
/// Generates the same ideal as raw_gens.
MonomialIdeal normalize(int dim, std::vector<ExponentVector> raw_gens);

/// The maximal ideal m = (x_1, ..., x_d).
MonomialIdeal maximal_ideal(int dim);

/// Unit ideal, represented by the single zero generator.
MonomialIdeal unit_ideal(int dim);

bool is_unit_ideal(const MonomialIdeal& I);

/// x^p in I, i.e. some generator divides x^p.
bool contains_monomial(const MonomialIdeal& I, const ExponentVector& p);

/// generatorwise containment J subset of I
bool contains_ideal(const MonomialIdeal& I, const MonomialIdeal& J);

/// I is m-primary iff every axis carries a pure-power generator.
bool is_m_primary(const MonomialIdeal& I);

/// Exponent of the minimal pure power of x_i contained in I's generators.
/// Requires m-primary.
Exp pure_power_bound(const MonomialIdeal& I, int axis);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, long n);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// (I : J)
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^[n]: every generator scaled entrywise by n.
MonomialIdeal frobenius_power(const MonomialIdeal& I, long n);

enum class ColengthMode { Sliced, BruteForce };

/// Number of lattice points outside the staircase of I, i.e. dim_k R/I.
/// Requires m-primary. Sliced recursion on the last coordinate is the
/// default; brute-force box enumeration is the oracle mode.
mpz_class colength(const MonomialIdeal& I,
                   ColengthMode mode = ColengthMode::Sliced);

}  // namespace teissier
