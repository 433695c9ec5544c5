#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "teissier/errors.hpp"
#include "teissier/hilbert.hpp"
#include "teissier/newton.hpp"

using namespace teissier;

namespace {

MonomialIdeal ideal(int dim, std::vector<ExponentVector> gens) {
  return normalize(dim, std::move(gens));
}

}  // namespace

TEST_CASE("np_contains") {
  NewtonPolyhedron np22 = newton_polyhedron(ideal(2, {{2, 0}, {0, 2}}));
  CHECK(np_contains(np22, ExponentVector{1, 1}));
  CHECK_FALSE(np_contains(np22, ExponentVector{1, 0}));
  NewtonPolyhedron np23 = newton_polyhedron(ideal(2, {{2, 0}, {0, 3}}));
  CHECK_FALSE(np_contains(np23, ExponentVector{1, 1}));
  CHECK(np_contains(np23, RationalPoint{1, mpq_class(3, 2)}));
}

TEST_CASE("np membership is monotone and holds at generators") {
  MonomialIdeal I = ideal(3, {{3, 0, 0}, {0, 2, 0}, {0, 0, 4}, {1, 1, 1}});
  NewtonPolyhedron np = newton_polyhedron(I);
  for (const auto& g : I.gens) {
    CHECK(np_contains(np, g));
    ExponentVector up = g;
    up[0] += 2;
    CHECK(np_contains(np, up));
  }
}

TEST_CASE("integral_closure") {
  CHECK(integral_closure(maximal_ideal(2)) == maximal_ideal(2));
  CHECK(integral_closure(ideal(2, {{2, 0}, {0, 2}})) ==
        ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(integral_closure(ideal(2, {{3, 0}, {0, 3}})) ==
        ideal(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
}

TEST_CASE("closure is extensive and idempotent") {
  MonomialIdeal I = ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}});
  MonomialIdeal C = integral_closure(I);
  CHECK(contains_ideal(C, I));
  CHECK(integral_closure(C) == C);
  CHECK(multiplicity(I) == multiplicity(C));
}

TEST_CASE("closure_membership_oracle") {
  CHECK(closure_membership_oracle(ideal(2, {{2, 0}, {0, 2}}), {1, 1}, 2));
  CHECK_FALSE(closure_membership_oracle(ideal(2, {{2, 0}, {0, 3}}), {1, 1}, 6));
  CHECK(closure_membership_oracle(maximal_ideal(2), {1, 0}, 1));
}

TEST_CASE("oracle-true implies LP-true on a box scan") {
  MonomialIdeal I = ideal(2, {{4, 0}, {1, 2}, {0, 5}});
  NewtonPolyhedron np = newton_polyhedron(I);
  for (Exp a = 0; a <= 4; ++a)
    for (Exp b = 0; b <= 5; ++b) {
      ExponentVector p{a, b};
      if (closure_membership_oracle(I, p, 24)) CHECK(np_contains(np, p));
    }
}

TEST_CASE("is_reduction") {
  CHECK(is_reduction(ideal(2, {{2, 0}, {0, 2}}), power(maximal_ideal(2), 2)));
  CHECK(is_reduction(ideal(2, {{3, 0}, {0, 3}}), power(maximal_ideal(2), 3)));
  CHECK_FALSE(is_reduction(ideal(2, {{2, 0}, {0, 3}}),
                           ideal(2, {{2, 0}, {1, 1}, {0, 3}})));
  CHECK_THROWS_AS(
      is_reduction(power(maximal_ideal(2), 2), ideal(2, {{2, 0}, {0, 2}})),
      InputError);
}

TEST_CASE("scaled_closure_equal") {
  CHECK(scaled_closure_equal(maximal_ideal(2), 2, power(maximal_ideal(2), 2),
                             1));
  CHECK_FALSE(
      scaled_closure_equal(maximal_ideal(2), 1, ideal(2, {{2, 0}, {0, 3}}), 1));
  CHECK(scaled_closure_equal(ideal(2, {{2, 0}, {0, 2}}), 3,
                             ideal(2, {{3, 0}, {0, 3}}), 2));
}

TEST_CASE("unscaled closure equality matches closure comparison") {
  MonomialIdeal I = ideal(2, {{2, 0}, {0, 2}});
  MonomialIdeal J = power(maximal_ideal(2), 2);
  CHECK(scaled_closure_equal(I, 1, J, 1));
  CHECK(integral_closure(I) == integral_closure(J));
  MonomialIdeal K = ideal(2, {{2, 0}, {0, 3}});
  CHECK_FALSE(scaled_closure_equal(I, 1, K, 1));
  CHECK(integral_closure(I) != integral_closure(K));
}

TEST_CASE("covolume_2d") {
  CHECK(covolume_2d(maximal_ideal(2)) == mpq_class(1, 2));
  CHECK(covolume_2d(ideal(2, {{2, 0}, {0, 3}})) == 3);
  CHECK(covolume_2d(product(maximal_ideal(2), ideal(2, {{2, 0}, {0, 3}}))) ==
        mpq_class(11, 2));
  CHECK_THROWS_AS(covolume_2d(maximal_ideal(3)), InputError);
}

TEST_CASE("multiplicity equals twice the covolume in the plane") {
  const MonomialIdeal cases[] = {
      ideal(2, {{2, 0}, {1, 1}, {0, 3}}),
      ideal(2, {{4, 0}, {1, 2}, {0, 5}}),
      ideal(2, {{3, 0}, {2, 1}, {1, 3}, {0, 4}}),
  };
  for (const auto& I : cases)
    CHECK(multiplicity(I) == 2 * covolume_2d(I));
}
