#include "teissier/newton.hpp"

#include <algorithm>

#include "teissier/errors.hpp"

namespace teissier {

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) {
  return NewtonPolyhedron{I.dim, I.gens};
}

namespace {

// Phase-1 simplex on:  sum_j l_j v_j + s = q,  sum_j l_j = 1,  l, s >= 0.
// Slacks start basic on the first d rows (q >= 0); one artificial covers the
// convexity row. Bland's rule on both the entering and leaving choice.
bool lp_feasible(const std::vector<ExponentVector>& pts, int d,
                 const RationalPoint& q) {
  const int g = static_cast<int>(pts.size());
  const int m = d + 1;
  const int art = g + d;       // artificial column
  const int ncols = g + d + 1; // lambdas, slacks, artificial
  const int rhs = ncols;

  std::vector<std::vector<mpq_class>> T(m,
                                        std::vector<mpq_class>(ncols + 1, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < g; ++j) T[i][j] = pts[j][i];
    T[i][g + i] = 1;
    T[i][rhs] = q[i];
  }
  for (int j = 0; j < g; ++j) T[d][j] = 1;
  T[d][art] = 1;
  T[d][rhs] = 1;

  std::vector<int> basis(m);
  for (int i = 0; i < d; ++i) basis[i] = g + i;
  basis[d] = art;

  // Reduced costs for min(artificial): r_j = c_j - T[d][j], c = e_art.
  std::vector<mpq_class> red(ncols, 0);
  for (int j = 0; j < ncols; ++j) red[j] = -T[d][j];
  red[art] = 0;

  while (true) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j)
      if (j != art && red[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    mpq_class best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      mpq_class ratio = T[i][rhs] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw TheoremViolation("phase-1 simplex unbounded");  // cannot happen

    mpq_class piv = T[leave][enter];
    for (int j = 0; j <= ncols; ++j) T[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      mpq_class f = T[i][enter];
      for (int j = 0; j <= ncols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (red[enter] != 0) {
      mpq_class f = red[enter];
      for (int j = 0; j < ncols; ++j) red[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  mpq_class objective = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] == art) objective += T[i][rhs];
  return objective == 0;
}

}  // namespace

bool np_contains(const NewtonPolyhedron& NP, const RationalPoint& q) {
  if (static_cast<int>(q.size()) != NP.dim)
    throw InputError("dimension mismatch");
  return lp_feasible(NP.points, NP.dim, q);
}

bool np_contains(const NewtonPolyhedron& NP, const ExponentVector& q) {
  RationalPoint qq(q.begin(), q.end());
  return np_contains(NP, qq);
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (is_unit_ideal(I)) return I;
  if (!is_m_primary(I))
    throw InputError("integral_closure requires an m-primary ideal");
  const NewtonPolyhedron NP = newton_polyhedron(I);
  std::vector<Exp> bounds(I.dim);
  for (int i = 0; i < I.dim; ++i) bounds[i] = pure_power_bound(I, i);

  std::vector<ExponentVector> members;
  ExponentVector p(I.dim, 0);
  while (true) {
    if (contains_monomial(I, p) || np_contains(NP, p))
      members.push_back(p);
    int axis = 0;
    while (axis < I.dim) {
      if (++p[axis] <= bounds[axis]) break;
      p[axis] = 0;
      ++axis;
    }
    if (axis == I.dim) break;
  }
  return normalize(I.dim, std::move(members));
}

bool closure_membership_oracle(const MonomialIdeal& I, const ExponentVector& p,
                               long kmax) {
  if (kmax < 1) throw InputError("kmax must be >= 1");
  for (long k = 1; k <= kmax; ++k) {
    ExponentVector kp(p);
    for (auto& e : kp) e *= k;
    if (contains_monomial(power(I, k), kp)) return true;
  }
  return false;
}

bool is_reduction(const MonomialIdeal& J, const MonomialIdeal& I) {
  if (J.dim != I.dim) throw InputError("dimension mismatch");
  if (!contains_ideal(I, J))
    throw InputError("is_reduction requires J to be contained in I");
  if (!is_m_primary(I) || !is_m_primary(J))
    throw InputError("is_reduction requires m-primary ideals");
  const NewtonPolyhedron NPJ = newton_polyhedron(J);
  return std::all_of(I.gens.begin(), I.gens.end(),
                     [&](const auto& v) { return np_contains(NPJ, v); });
}

bool scaled_closure_equal(const MonomialIdeal& I, long r,
                          const MonomialIdeal& J, long s) {
  if (I.dim != J.dim) throw InputError("dimension mismatch");
  if (r < 1 || s < 1) throw InputError("scale factors must be positive");
  if (!is_m_primary(I) || !is_m_primary(J))
    throw InputError("scaled_closure_equal requires m-primary ideals");
  const NewtonPolyhedron NPI = newton_polyhedron(I);
  const NewtonPolyhedron NPJ = newton_polyhedron(J);
  // Both sets are convex and upward closed, so generator membership after
  // rescaling decides equality.
  for (const auto& v : I.gens) {
    RationalPoint q;
    for (Exp e : v) {
      mpq_class c(mpz_class(e) * r, mpz_class(s));
      c.canonicalize();
      q.push_back(c);
    }
    if (!np_contains(NPJ, q)) return false;
  }
  for (const auto& w : J.gens) {
    RationalPoint q;
    for (Exp e : w) {
      mpq_class c(mpz_class(e) * s, mpz_class(r));
      c.canonicalize();
      q.push_back(c);
    }
    if (!np_contains(NPI, q)) return false;
  }
  return true;
}

mpq_class covolume_2d(const MonomialIdeal& I) {
  if (I.dim != 2) throw InputError("covolume_2d requires dimension 2");
  if (!is_m_primary(I))
    throw InputError("covolume_2d requires an m-primary ideal");

  // Generators sorted by x; the antichain makes y strictly decreasing.
  std::vector<ExponentVector> pts = I.gens;
  std::sort(pts.begin(), pts.end());

  // Lower-left convex chain of the staircase vertices.
  std::vector<ExponentVector> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      mpz_class cross = mpz_class(b[0] - a[0]) * (p[1] - a[1]) -
                        mpz_class(b[1] - a[1]) * (p[0] - a[0]);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  // Shoelace over (0,0), hull chain from (0, c_y) down to (c_x, 0).
  std::vector<ExponentVector> poly;
  poly.push_back({0, 0});
  poly.insert(poly.end(), hull.begin(), hull.end());
  mpz_class twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice += mpz_class(a[0]) * b[1] - mpz_class(a[1]) * b[0];
  }
  mpq_class area(abs(twice), mpz_class(2));
  area.canonicalize();
  return area;
}

}  // namespace teissier
