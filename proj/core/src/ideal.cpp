#include "teissier/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "teissier/errors.hpp"

namespace teissier {

bool divides(const ExponentVector& p, const ExponentVector& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > q[i]) return false;
  return true;
}

namespace {

void validate_gens(int dim, const std::vector<ExponentVector>& gens) {
  if (dim < 1) throw InputError("ambient dimension must be >= 1");
  if (gens.empty()) throw InputError("generator set must be nonempty");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      throw InputError("generator length does not match ambient dimension");
    for (Exp e : g)
      if (e < 0) throw InputError("negative exponent in generator");
  }
}

// Antichain filter for d = 2: after a lex sort, keep exactly the points
// whose y strictly drops.
std::vector<ExponentVector> minimal_elements_2d(
    std::vector<ExponentVector> v) {
  std::sort(v.begin(), v.end());
  std::vector<ExponentVector> out;
  for (auto& p : v)
    if (out.empty() || p[1] < out.back()[1]) out.push_back(std::move(p));
  return out;
}

// Antichain filter for d = 3: lex sweep over x with a (y,z) staircase.
// Later points never dominate earlier ones in lex order, so a single pass
// with domination queries against the staircase suffices.
std::vector<ExponentVector> minimal_elements_3d(
    std::vector<ExponentVector> v) {
  std::sort(v.begin(), v.end());
  std::map<Exp, Exp> stair;  // y -> z, z strictly decreasing in y
  std::vector<ExponentVector> out;
  for (auto& p : v) {
    auto it = stair.upper_bound(p[1]);
    if (it != stair.begin() && std::prev(it)->second <= p[2]) continue;
    it = stair.insert_or_assign(p[1], p[2]).first;
    for (auto nxt = std::next(it);
         nxt != stair.end() && nxt->second >= p[2];)
      nxt = stair.erase(nxt);
    out.push_back(std::move(p));
  }
  // a lex-later point can only dominate an equal one, so `out` is already
  // the antichain (duplicates are caught by the staircase query)
  return out;
}

std::vector<ExponentVector> minimal_elements(int dim,
                                             std::vector<ExponentVector> v) {
  if (dim == 1) {
    return {*std::min_element(v.begin(), v.end())};
  }
  if (dim == 2) return minimal_elements_2d(std::move(v));
  if (dim == 3) return minimal_elements_3d(std::move(v));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  // Sort by total degree so any divisor of an element precedes it.
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), Exp{0}) <
           std::accumulate(b.begin(), b.end(), Exp{0});
  });
  std::vector<ExponentVector> out;
  for (auto& p : v) {
    bool keep = true;
    for (const auto& q : out)
      if (divides(q, p)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

MonomialIdeal normalize(int dim, std::vector<ExponentVector> raw_gens) {
  validate_gens(dim, raw_gens);
  auto min = minimal_elements(dim, std::move(raw_gens));
  std::sort(min.begin(), min.end(), std::greater<>());  // canonical order
  return MonomialIdeal{dim, std::move(min)};
}

MonomialIdeal maximal_ideal(int dim) {
  std::vector<ExponentVector> gens;
  for (int i = 0; i < dim; ++i) {
    ExponentVector e(dim, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return normalize(dim, std::move(gens));
}

MonomialIdeal unit_ideal(int dim) {
  return MonomialIdeal{dim, {ExponentVector(dim, 0)}};
}

bool is_unit_ideal(const MonomialIdeal& I) {
  return I.gens.size() == 1 &&
         std::all_of(I.gens[0].begin(), I.gens[0].end(),
                     [](Exp e) { return e == 0; });
}

bool contains_monomial(const MonomialIdeal& I, const ExponentVector& p) {
  if (static_cast<int>(p.size()) != I.dim)
    throw InputError("monomial length does not match ideal dimension");
  return std::any_of(I.gens.begin(), I.gens.end(),
                     [&](const auto& g) { return divides(g, p); });
}

bool contains_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim != J.dim) throw InputError("dimension mismatch");
  return std::all_of(J.gens.begin(), J.gens.end(),
                     [&](const auto& g) { return contains_monomial(I, g); });
}

namespace {

// Pure power on `axis`: all other coordinates zero. The zero vector (unit
// ideal) counts for every axis.
bool pure_on_axis(const ExponentVector& g, int axis) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (static_cast<int>(i) != axis && g[i] != 0) return false;
  return true;
}

}  // namespace

bool is_m_primary(const MonomialIdeal& I) {
  for (int axis = 0; axis < I.dim; ++axis) {
    bool found = false;
    for (const auto& g : I.gens)
      if (pure_on_axis(g, axis)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

Exp pure_power_bound(const MonomialIdeal& I, int axis) {
  Exp best = -1;
  for (const auto& g : I.gens)
    if (pure_on_axis(g, axis) && (best < 0 || g[axis] < best)) best = g[axis];
  if (best < 0)
    throw InputError("ideal is not m-primary: no pure power on axis " +
                     std::to_string(axis));
  return best;
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim != J.dim) throw InputError("dimension mismatch");
  std::vector<ExponentVector> sums;
  sums.reserve(I.gens.size() * J.gens.size());
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) {
      ExponentVector s(I.dim);
      for (int i = 0; i < I.dim; ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  return normalize(I.dim, std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& I, long n) {
  if (n < 0) throw InputError("negative power");
  if (n == 0) return unit_ideal(I.dim);
  MonomialIdeal base = I;
  MonomialIdeal acc = unit_ideal(I.dim);
  bool acc_trivial = true;
  while (n > 0) {
    if (n & 1) {
      acc = acc_trivial ? base : product(acc, base);
      acc_trivial = false;
    }
    n >>= 1;
    if (n > 0) base = product(base, base);
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim != J.dim) throw InputError("dimension mismatch");
  std::vector<ExponentVector> lcms;
  lcms.reserve(I.gens.size() * J.gens.size());
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) {
      ExponentVector m(I.dim);
      for (int i = 0; i < I.dim; ++i) m[i] = std::max(a[i], b[i]);
      lcms.push_back(std::move(m));
    }
  return normalize(I.dim, std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim != J.dim) throw InputError("dimension mismatch");
  MonomialIdeal result;
  bool first = true;
  for (const auto& g : J.gens) {
    std::vector<ExponentVector> shifted;
    shifted.reserve(I.gens.size());
    for (const auto& h : I.gens) {
      ExponentVector s(I.dim);
      for (int i = 0; i < I.dim; ++i) s[i] = std::max<Exp>(h[i] - g[i], 0);
      shifted.push_back(std::move(s));
    }
    MonomialIdeal part = normalize(I.dim, std::move(shifted));
    result = first ? std::move(part) : intersect(result, part);
    first = false;
  }
  return result;
}

MonomialIdeal frobenius_power(const MonomialIdeal& I, long n) {
  if (n < 0) throw InputError("negative Frobenius-style power");
  if (n == 0) return unit_ideal(I.dim);
  std::vector<ExponentVector> scaled = I.gens;
  for (auto& g : scaled)
    for (auto& e : g) e *= n;
  return normalize(I.dim, std::move(scaled));
}

namespace {

// Planar staircase with its area (= 2-dimensional colength) maintained
// incrementally, so repeated slice evaluations cost O(log m) amortized.
struct Staircase2D {
  std::map<Exp, Exp> steps;  // x -> y, y strictly decreasing in x
  mpz_class area = 0;

  // Replaces the whole staircase with an antichain (lex-sorted ascending,
  // must contain pure powers on both axes).
  void reset(const std::vector<ExponentVector>& antichain) {
    steps.clear();
    area = 0;
    Exp prev_y = antichain.front()[1];
    for (const auto& p : antichain) {
      steps.emplace(p[0], p[1]);
      area += mpz_class(static_cast<long>(p[0])) * (prev_y - p[1]);
      prev_y = p[1];
    }
  }

  void insert(Exp a, Exp b) {
    auto it = steps.upper_bound(a);
    Exp ytop;
    {
      auto p = std::prev(it);  // seeded with x = 0, so the predecessor exists
      if (p->second <= b) return;
      ytop = p->second;
      if (p->first == a) steps.erase(p);
    }
    mpz_class removed = 0;
    Exp cur_top = ytop;
    while (it != steps.end() && it->second >= b) {
      removed += mpz_class(static_cast<long>(it->first)) *
                 (cur_top - it->second);
      cur_top = it->second;
      it = steps.erase(it);
    }
    if (cur_top > b)
      removed += mpz_class(static_cast<long>(it->first)) * (cur_top - b);
    area += mpz_class(static_cast<long>(a)) * (ytop - b) - removed;
    steps.emplace(a, b);
  }
};

mpz_class colength_2d(const MonomialIdeal& I) {
  std::vector<ExponentVector> v = I.gens;
  std::sort(v.begin(), v.end());
  Staircase2D st;
  st.reset(v);
  return st.area;
}

// Sweep the last coordinate, maintaining the area of the 2-dimensional
// slice staircase. Cost depends on the number of generators only.
mpz_class colength_3d(const MonomialIdeal& I) {
  const Exp cap = pure_power_bound(I, 2);
  if (cap == 0) return 0;
  std::vector<ExponentVector> v = I.gens;
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a[2] < b[2];
  });

  // z = 0 layer carries both planar pure powers; seed the staircase with it.
  std::vector<ExponentVector> base;
  std::size_t i = 0;
  while (i < v.size() && v[i][2] == 0) {
    base.push_back({v[i][0], v[i][1]});
    ++i;
  }
  Staircase2D st;
  st.reset(minimal_elements_2d(std::move(base)));

  mpz_class total = 0;
  Exp prev = 0;
  for (; i < v.size() && v[i][2] < cap; ++i) {
    if (v[i][2] > prev) {
      total += mpz_class(static_cast<long>(v[i][2] - prev)) * st.area;
      prev = v[i][2];
    }
    st.insert(v[i][0], v[i][1]);
  }
  total += mpz_class(static_cast<long>(cap - prev)) * st.area;
  return total;
}

// Slice recursion on the last coordinate for d >= 4. Layers with the same
// active generator set are grouped, so the cost depends on the number of
// generators, not on the size of the exponents.
mpz_class colength_sliced(const MonomialIdeal& I) {
  if (I.dim == 1) return mpz_class(static_cast<unsigned long>(I.gens[0][0]));
  if (I.dim == 2) return colength_2d(I);
  if (I.dim == 3) return colength_3d(I);
  const int last = I.dim - 1;
  const Exp cap = pure_power_bound(I, last);
  if (cap == 0) return 0;

  std::vector<ExponentVector> by_last = I.gens;
  std::sort(by_last.begin(), by_last.end(),
            [last](const auto& a, const auto& b) { return a[last] < b[last]; });

  mpz_class total = 0;
  std::vector<ExponentVector> active;
  std::size_t i = 0;
  while (i < by_last.size()) {
    const Exp t0 = by_last[i][last];
    if (t0 >= cap) break;
    while (i < by_last.size() && by_last[i][last] == t0) {
      active.emplace_back(by_last[i].begin(), by_last[i].end() - 1);
      ++i;
    }
    const Exp t1 = (i < by_last.size()) ? std::min(by_last[i][last], cap) : cap;
    MonomialIdeal slice = normalize(I.dim - 1, active);
    total += mpz_class(static_cast<unsigned long>(t1 - t0)) *
             colength_sliced(slice);
  }
  return total;
}

mpz_class colength_bruteforce(const MonomialIdeal& I) {
  std::vector<Exp> bounds(I.dim);
  for (int i = 0; i < I.dim; ++i) bounds[i] = pure_power_bound(I, i);
  mpz_class count = 0;
  ExponentVector p(I.dim, 0);
  int axis = 0;
  // odometer scan of the bounding box
  while (true) {
    if (!contains_monomial(I, p)) ++count;
    axis = 0;
    while (axis < I.dim) {
      if (++p[axis] < bounds[axis]) break;
      p[axis] = 0;
      ++axis;
    }
    if (axis == I.dim) break;
  }
  return count;
}

}  // namespace

mpz_class colength(const MonomialIdeal& I, ColengthMode mode) {
  if (is_unit_ideal(I)) return 0;
  if (!is_m_primary(I))
    throw InputError("colength is infinite: ideal is not m-primary");
  return mode == ColengthMode::Sliced ? colength_sliced(I)
                                      : colength_bruteforce(I);
}

}  // namespace teissier
