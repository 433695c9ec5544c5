#pragma once

#include <gmpxx.h>

#include <vector>

#include "teissier/ideal.hpp"

namespace teissier {

/// conv(generator exponents) + R_{>=0}^d, queried by exact LP feasibility.
struct NewtonPolyhedron {
  int dim = 0;
  std::vector<ExponentVector> points;
};

using RationalPoint = std::vector<mpq_class>;

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I);

/// q in NP iff some convex combination of the generator points is
/// componentwise <= q. Exact-rational phase-1 simplex, Bland's rule.
bool np_contains(const NewtonPolyhedron& NP, const RationalPoint& q);

bool np_contains(const NewtonPolyhedron& NP, const ExponentVector& q);

/// Lattice points of the Newton polyhedron: the integral closure of I.
MonomialIdeal integral_closure(const MonomialIdeal& I);

/// Brute-force power test x^{kp} in I^k for some k <= kmax. One-sided:
/// false may only mean kmax was too small.
bool closure_membership_oracle(const MonomialIdeal& I, const ExponentVector& p,
                               long kmax);

/// J is a reduction of I (requires J subset of I; both m-primary).
bool is_reduction(const MonomialIdeal& J, const MonomialIdeal& I);

/// r * NP(I) == s * NP(J)
bool scaled_closure_equal(const MonomialIdeal& I, long r,
                          const MonomialIdeal& J, long s);

/// Area of the staircase region below NP(I) for d = 2; e(I) = 2 * covolume.
mpq_class covolume_2d(const MonomialIdeal& I);

}  // namespace teissier
