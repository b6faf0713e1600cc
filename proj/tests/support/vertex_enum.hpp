#pragma once

// Brute-force LP oracle: enumerates every basic solution (all equality rows
// tight plus every choice of n - rank(eq) tight inequality rows or bounds),
// keeps the feasible ones and returns the least objective. Shares nothing
// with the simplex code beyond the problem struct.

#include <algorithm>
#include <optional>
#include <vector>

#include "soplab/qlinalg/lp.hpp"

namespace soplab::testing {

using qlinalg::LPProblem;
using qlinalg::Rational;
using qlinalg::Sense;

struct Hyperplane {
  std::vector<Rational> a;
  Rational b;
};

// Unique solution of the (possibly overdetermined) system, if any.
inline std::optional<std::vector<Rational>> solve_unique(std::vector<Hyperplane> rows,
                                                         std::size_t n) {
  std::size_t r = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p].a[c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational const inv = 1 / rows[r].a[c];
    for (auto& x : rows[r].a) x *= inv;
    rows[r].b *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i].a[c] == 0) continue;
      Rational const f = rows[i].a[c];
      for (std::size_t k = 0; k < n; ++k) rows[i].a[k] -= f * rows[r].a[k];
      rows[i].b -= f * rows[r].b;
    }
    pivcol.push_back(c);
    ++r;
  }
  if (r < n) return std::nullopt;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i].b != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = rows[i].b;
  return x;
}

inline std::size_t rank_of(std::vector<Hyperplane> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p].a[c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i].a[c] == 0) continue;
      Rational const f = rows[i].a[c] / rows[r].a[c];
      for (std::size_t k = 0; k < n; ++k) rows[i].a[k] -= f * rows[r].a[k];
      rows[i].b -= f * rows[r].b;
    }
    ++r;
  }
  return r;
}

inline bool oracle_feasible(LPProblem const& p, std::vector<Rational> const& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (p.bounds[j].lower && x[j] < *p.bounds[j].lower) return false;
    if (p.bounds[j].upper && x[j] > *p.bounds[j].upper) return false;
  }
  for (auto const& c : p.constraints) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += c.coeffs[j] * x[j];
    if (c.sense == Sense::LessEqual && s > c.rhs) return false;
    if (c.sense == Sense::GreaterEqual && s < c.rhs) return false;
    if (c.sense == Sense::Equal && s != c.rhs) return false;
  }
  return true;
}

struct VertexOptimum {
  bool feasible_vertex_found = false;
  Rational value;
  std::vector<Rational> point;
  std::size_t systems_tried = 0;
};

inline VertexOptimum enumerate_vertices(LPProblem const& p) {
  auto const n = p.num_vars();
  std::vector<Hyperplane> eq, ineq;
  for (auto const& c : p.constraints)
    (c.sense == Sense::Equal ? eq : ineq).push_back({c.coeffs, c.rhs});
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> unit(n, Rational(0));
    unit[j] = 1;
    if (p.bounds[j].lower) ineq.push_back({unit, *p.bounds[j].lower});
    if (p.bounds[j].upper) ineq.push_back({unit, *p.bounds[j].upper});
  }
  VertexOptimum best;
  auto const need_r = rank_of(eq, n);
  if (need_r > n) return best;
  auto const k = n - need_r;
  if (k > ineq.size()) return best;
  std::vector<bool> pick(ineq.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    auto rows = eq;
    for (std::size_t i = 0; i < ineq.size(); ++i)
      if (pick[i]) rows.push_back(ineq[i]);
    ++best.systems_tried;
    auto x = solve_unique(std::move(rows), n);
    if (!x || !oracle_feasible(p, *x)) continue;
    Rational z = 0;
    for (std::size_t j = 0; j < n; ++j) z += p.objective[j] * (*x)[j];
    if (!best.feasible_vertex_found || z < best.value) {
      best.feasible_vertex_found = true;
      best.value = z;
      best.point = *x;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace soplab::testing
