#include "soplab/qlinalg/lp.hpp"

#include <limits>
#include <string>

#include "soplab/error.hpp"

namespace soplab::qlinalg {

std::string_view to_string(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal:
      return "optimal";
    case LPStatus::Infeasible:
      return "infeasible";
    case LPStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

std::size_t LPProblem::add_variable(Rational cost, VariableBound bound) {
  objective.push_back(std::move(cost));
  bounds.push_back(std::move(bound));
  for (auto& c : constraints) c.coeffs.resize(objective.size());
  return objective.size() - 1;
}

void LPProblem::validate() const {
  auto const n = num_vars();
  if (bounds.size() != n)
    fail(ErrorKind::Structural, "bounds list has " + std::to_string(bounds.size()) +
                                    " entries for " + std::to_string(n) + " variables");
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (constraints[i].coeffs.size() != n)
      fail(ErrorKind::Structural, "constraint " + std::to_string(i) + " has " +
                                      std::to_string(constraints[i].coeffs.size()) +
                                      " coefficients for " + std::to_string(n) + " variables");
  for (std::size_t j = 0; j < n; ++j)
    if (bounds[j].lower && bounds[j].upper && *bounds[j].lower > *bounds[j].upper)
      fail(ErrorKind::Structural, "variable " + std::to_string(j) + " has crossed bounds");
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class ColKind { Shifted, Reflected, Free, Slack, UpperSlack };

struct Column {
  ColKind kind;
  std::size_t var;  // original variable (or constraint for Slack)
};

using Row = std::vector<Rational>;

// Standard form: rows · x = rhs, every column ≥ 0 except Free ones.
struct StandardForm {
  std::vector<Column> cols;
  std::vector<Row> rows;
  Row rhs;
  Row cost;
  Rational cost_const = 0;
  std::vector<std::size_t> var_col;  // original variable -> its column
};

StandardForm standardize(LPProblem const& p) {
  StandardForm sf;
  auto const n = p.num_vars();
  auto const m = p.constraints.size();
  sf.var_col.resize(n);
  std::vector<std::size_t> upper_rows;  // variables needing an upper-bound row
  for (std::size_t j = 0; j < n; ++j) {
    auto const& bd = p.bounds[j];
    ColKind kind = bd.lower ? ColKind::Shifted : (bd.upper ? ColKind::Reflected : ColKind::Free);
    sf.var_col[j] = sf.cols.size();
    sf.cols.push_back({kind, j});
    if (kind == ColKind::Shifted && bd.upper) upper_rows.push_back(j);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (p.constraints[i].sense != Sense::Equal) sf.cols.push_back({ColKind::Slack, i});
  for (auto j : upper_rows) sf.cols.push_back({ColKind::UpperSlack, j});

  auto const ncols = sf.cols.size();
  sf.cost.assign(ncols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    auto const& c = p.objective[j];
    auto const& bd = p.bounds[j];
    switch (sf.cols[j].kind) {
      case ColKind::Shifted:
        sf.cost[j] = c;
        sf.cost_const += c * *bd.lower;
        break;
      case ColKind::Reflected:
        sf.cost[j] = -c;
        sf.cost_const += c * *bd.upper;
        break;
      default:
        sf.cost[j] = c;
        break;
    }
  }

  std::size_t col = n;
  for (std::size_t i = 0; i < m; ++i) {
    auto const& con = p.constraints[i];
    Row row(ncols, Rational(0));
    Rational rhs = con.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      auto const& a = con.coeffs[j];
      if (a == 0) continue;
      switch (sf.cols[j].kind) {
        case ColKind::Shifted:
          row[j] = a;
          rhs -= a * *p.bounds[j].lower;
          break;
        case ColKind::Reflected:
          row[j] = -a;
          rhs -= a * *p.bounds[j].upper;
          break;
        default:
          row[j] = a;
          break;
      }
    }
    if (con.sense == Sense::LessEqual) row[col++] = 1;
    if (con.sense == Sense::GreaterEqual) row[col++] = -1;
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(rhs));
  }
  for (auto j : upper_rows) {
    Row row(ncols, Rational(0));
    row[j] = 1;
    row[col++] = 1;
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(*p.bounds[j].upper - *p.bounds[j].lower);
  }
  return sf;
}

// Dense tableau over the non-negative columns of the reduced system.
class Tableau {
 public:
  Tableau(std::size_t ncols, std::vector<Row> rows, Row rhs, std::vector<std::size_t> basis)
      : ncols_(ncols),
        t_(std::move(rows)),
        b_(std::move(rhs)),
        basis_(std::move(basis)),
        active_(t_.size(), true) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return ncols_; }
  Rational const& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  Rational const& rhs(std::size_t r) const { return b_[r]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  bool active(std::size_t r) const { return active_[r]; }
  void deactivate(std::size_t r) { active_[r] = false; }
  Rational const& reduced_cost(std::size_t c) const { return d_[c]; }
  Rational objective() const { return -zneg_; }
  std::size_t pivots() const { return pivots_; }

  void set_costs(Row const& costs) {
    d_ = costs;
    zneg_ = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (!active_[r]) continue;
      Rational const f = d_[basis_[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols(); ++c)
        if (t_[r][c] != 0) d_[c] -= f * t_[r][c];
      zneg_ -= f * b_[r];
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    ++pivots_;
    Row& pr = t_[r];
    if (pr[q] != 1) {
      Rational const inv = 1 / pr[q];
      for (auto& x : pr)
        if (x != 0) x *= inv;
      b_[r] *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < pr.size(); ++c)
      if (pr[c] != 0) nz.push_back(c);
    Rational f;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || t_[i][q] == 0) continue;
      f = t_[i][q];
      for (auto c : nz) t_[i][c] -= f * pr[c];
      b_[i] -= f * b_[r];
    }
    if (d_[q] != 0) {
      f = d_[q];
      for (auto c : nz) d_[c] -= f * pr[c];
      zneg_ -= f * b_[r];
    }
    basis_[r] = q;
  }

  // Bland's rule. Returns npos at optimality, else the entering column whose
  // ratio test found no leaving row (unbounded direction).
  std::size_t run(std::vector<bool> const& allowed) {
    for (;;) {
      std::size_t q = npos;
      for (std::size_t c = 0; c < cols(); ++c)
        if (allowed[c] && d_[c] < 0) {
          q = c;
          break;
        }
      if (q == npos) return npos;
      std::size_t leave = npos;
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (!active_[r] || t_[r][q] <= 0) continue;
        Rational ratio = b_[r] / t_[r][q];
        if (leave == npos || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == npos) return q;
      pivot(leave, q);
    }
  }

 private:
  std::size_t ncols_;
  std::vector<Row> t_;
  Row b_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  Row d_;
  Rational zneg_ = 0;
  std::size_t pivots_ = 0;
};

Rational sign_of(Rational const& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

LPSolution minimize(LPProblem const& problem) {
  problem.validate();
  auto const n = problem.num_vars();
  auto const m = problem.constraints.size();
  StandardForm sf = standardize(problem);
  auto const ncols = sf.cols.size();
  auto const nrows = sf.rows.size();

  // Row-operation record, so reduced-row multipliers can be mapped back onto
  // the original constraints for the Farkas certificate.
  std::vector<Row> track(nrows, Row(nrows, Rational(0)));
  for (std::size_t i = 0; i < nrows; ++i) track[i][i] = 1;

  // Gauss-Jordan elimination of the free columns.
  std::vector<std::size_t> defining(nrows, npos);  // row -> free column
  std::vector<std::size_t> loose;                  // free columns with no row
  for (std::size_t q = 0; q < ncols; ++q)
    if (sf.cols[q].kind == ColKind::Free) loose.push_back(q);
  // A later elimination can make a skipped column reappear in open rows, so
  // sweep until a pass makes no progress.
  for (bool progress = true; progress;) {
    progress = false;
    for (auto it = loose.begin(); it != loose.end();) {
      auto const q = *it;
      std::size_t r = npos;
      for (std::size_t i = 0; i < nrows; ++i)
        if (defining[i] == npos && sf.rows[i][q] != 0) {
          r = i;
          break;
        }
      if (r == npos) {
        ++it;
        continue;
      }
      it = loose.erase(it);
      progress = true;
      Rational const inv = 1 / sf.rows[r][q];
      for (auto& x : sf.rows[r]) x *= inv;
      sf.rhs[r] *= inv;
      for (auto& x : track[r]) x *= inv;
      for (std::size_t i = 0; i < nrows; ++i) {
        if (i == r || sf.rows[i][q] == 0) continue;
        Rational const f = sf.rows[i][q];
        for (std::size_t c = 0; c < ncols; ++c)
          if (sf.rows[r][c] != 0) sf.rows[i][c] -= f * sf.rows[r][c];
        sf.rhs[i] -= f * sf.rhs[r];
        for (std::size_t c = 0; c < nrows; ++c)
          if (track[r][c] != 0) track[i][c] -= f * track[r][c];
      }
      if (sf.cost[q] != 0) {
        Rational const f = sf.cost[q];
        for (std::size_t c = 0; c < ncols; ++c)
          if (sf.rows[r][c] != 0) sf.cost[c] -= f * sf.rows[r][c];
        sf.cost_const += f * sf.rhs[r];
      }
      defining[r] = q;
    }
  }

  // Reduced system over the non-negative columns.
  std::vector<std::size_t> nonneg;  // tableau column -> standard column
  for (std::size_t c = 0; c < ncols; ++c)
    if (sf.cols[c].kind != ColKind::Free) nonneg.push_back(c);
  std::vector<std::size_t> red_rows;
  for (std::size_t i = 0; i < nrows; ++i)
    if (defining[i] == npos) red_rows.push_back(i);
  for (auto i : red_rows)
    if (sf.rhs[i] < 0) {
      for (auto& x : sf.rows[i]) x = -x;
      sf.rhs[i] = -sf.rhs[i];
      for (auto& x : track[i]) x = -x;
    }

  auto const nn = nonneg.size();
  auto const rr = red_rows.size();
  // Initial basis: unit columns where available, artificials elsewhere.
  std::vector<std::size_t> init(rr, npos);
  std::vector<bool> row_taken(rr, false);
  for (std::size_t tc = 0; tc < nn; ++tc) {
    auto const c = nonneg[tc];
    std::size_t hit = npos;
    bool unit = true;
    for (std::size_t k = 0; k < rr && unit; ++k) {
      auto const& x = sf.rows[red_rows[k]][c];
      if (x == 0) continue;
      if (x == 1 && hit == npos)
        hit = k;
      else
        unit = false;
    }
    if (unit && hit != npos && !row_taken[hit]) {
      row_taken[hit] = true;
      init[hit] = tc;
    }
  }
  std::size_t nart = 0;
  for (std::size_t k = 0; k < rr; ++k)
    if (init[k] == npos) init[k] = nn + nart++;

  std::vector<Row> tab(rr, Row(nn + nart, Rational(0)));
  Row tab_rhs(rr);
  for (std::size_t k = 0; k < rr; ++k) {
    for (std::size_t tc = 0; tc < nn; ++tc) tab[k][tc] = sf.rows[red_rows[k]][nonneg[tc]];
    if (init[k] >= nn) tab[k][init[k]] = 1;
    tab_rhs[k] = sf.rhs[red_rows[k]];
  }
  Tableau T(nn + nart, std::move(tab), std::move(tab_rhs), init);

  LPSolution sol;

  if (nart > 0) {
    Row c1(nn + nart, Rational(0));
    for (std::size_t a = nn; a < nn + nart; ++a) c1[a] = 1;
    T.set_costs(c1);
    std::vector<bool> allowed(nn + nart, true);
    T.run(allowed);
    if (T.objective() > 0) {
      // Phase-1 duals y_k = c1(init_k) - d(init_k); pull back through the
      // elimination record onto the original constraint rows.
      Row y_std(nrows, Rational(0));
      for (std::size_t k = 0; k < rr; ++k) {
        Rational const y = c1[init[k]] - T.reduced_cost(init[k]);
        if (y == 0) continue;
        auto const& tr = track[red_rows[k]];
        for (std::size_t c = 0; c < nrows; ++c)
          if (tr[c] != 0) y_std[c] += y * tr[c];
      }
      sol.status = LPStatus::Infeasible;
      sol.farkas.assign(y_std.begin(), y_std.begin() + static_cast<std::ptrdiff_t>(m));
      sol.pivots = T.pivots();
      return sol;
    }
    // Drive remaining artificials out of the basis.
    for (std::size_t k = 0; k < rr; ++k) {
      if (T.basic(k) < nn) continue;
      std::size_t q = npos;
      for (std::size_t tc = 0; tc < nn; ++tc)
        if (T.at(k, tc) != 0) {
          q = tc;
          break;
        }
      if (q == npos)
        T.deactivate(k);  // redundant row
      else
        T.pivot(k, q);
    }
  }

  Row c2(nn + nart, Rational(0));
  for (std::size_t tc = 0; tc < nn; ++tc) c2[tc] = sf.cost[nonneg[tc]];
  T.set_costs(c2);
  std::vector<bool> allowed(nn + nart, false);
  for (std::size_t tc = 0; tc < nn; ++tc) allowed[tc] = true;

  std::size_t loose_dir = npos;
  for (auto q : loose)
    if (sf.cost[q] != 0) {
      loose_dir = q;
      break;
    }
  std::size_t const entering = loose_dir == npos ? T.run(allowed) : npos;
  sol.pivots = T.pivots();

  // Standard-space point and (optionally) direction.
  Row xs(ncols, Rational(0));
  for (std::size_t k = 0; k < rr; ++k)
    if (T.active(k) && T.basic(k) < nn) xs[nonneg[T.basic(k)]] = T.rhs(k);
  auto recover_free = [&](Row& v, bool homogeneous) {
    for (std::size_t i = 0; i < nrows; ++i) {
      auto const q = defining[i];
      if (q == npos) continue;
      Rational val = homogeneous ? Rational(0) : sf.rhs[i];
      for (std::size_t c = 0; c < ncols; ++c)
        if (c != q && sf.rows[i][c] != 0) val -= sf.rows[i][c] * v[c];
      v[q] = val;
    }
  };
  recover_free(xs, false);

  auto to_original = [&](Row const& v, bool homogeneous) {
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) {
      auto const c = sf.var_col[j];
      switch (sf.cols[c].kind) {
        case ColKind::Shifted:
          x[j] = homogeneous ? v[c] : Rational(*problem.bounds[j].lower + v[c]);
          break;
        case ColKind::Reflected:
          x[j] = homogeneous ? Rational(-v[c]) : Rational(*problem.bounds[j].upper - v[c]);
          break;
        default:
          x[j] = v[c];
          break;
      }
    }
    return x;
  };

  sol.point = to_original(xs, false);
  if (loose_dir != npos || entering != npos) {
    Row ds(ncols, Rational(0));
    if (loose_dir != npos) {
      ds[loose_dir] = -sign_of(sf.cost[loose_dir]);
    } else {
      ds[nonneg[entering]] = 1;
      for (std::size_t k = 0; k < rr; ++k)
        if (T.active(k) && T.basic(k) < nn) ds[nonneg[T.basic(k)]] = -T.at(k, entering);
    }
    recover_free(ds, true);
    sol.status = LPStatus::Unbounded;
    sol.ray = to_original(ds, true);
    return sol;
  }
  sol.status = LPStatus::Optimal;
  sol.value = objective_value(problem, sol.point);
  if (sol.value != T.objective() + sf.cost_const)
    fail(ErrorKind::Consistency, "simplex objective disagrees with recomputed value");
  return sol;
}

Rational objective_value(LPProblem const& problem, std::vector<Rational> const& x) {
  Rational z = 0;
  for (std::size_t j = 0; j < problem.num_vars(); ++j) z += problem.objective[j] * x[j];
  return z;
}

bool is_feasible(LPProblem const& problem, std::vector<Rational> const& x) {
  if (x.size() != problem.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    auto const& bd = problem.bounds[j];
    if (bd.lower && x[j] < *bd.lower) return false;
    if (bd.upper && x[j] > *bd.upper) return false;
  }
  for (auto const& con : problem.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += con.coeffs[j] * x[j];
    switch (con.sense) {
      case Sense::LessEqual:
        if (lhs > con.rhs) return false;
        break;
      case Sense::Equal:
        if (lhs != con.rhs) return false;
        break;
      case Sense::GreaterEqual:
        if (lhs < con.rhs) return false;
        break;
    }
  }
  return true;
}

bool verify_infeasible(LPProblem const& problem, std::vector<Rational> const& y) {
  auto const n = problem.num_vars();
  if (y.size() != problem.constraints.size()) return false;
  std::vector<Rational> g(n, Rational(0));
  Rational yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto const& con = problem.constraints[i];
    if (con.sense == Sense::LessEqual && y[i] > 0) return false;
    if (con.sense == Sense::GreaterEqual && y[i] < 0) return false;
    for (std::size_t j = 0; j < n; ++j) g[j] += y[i] * con.coeffs[j];
    yb += y[i] * con.rhs;
  }
  Rational box_max = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (g[j] == 0) continue;
    auto const& bd = problem.bounds[j];
    if (g[j] > 0) {
      if (!bd.upper) return false;
      box_max += g[j] * *bd.upper;
    } else {
      if (!bd.lower) return false;
      box_max += g[j] * *bd.lower;
    }
  }
  return box_max < yb;
}

bool verify_unbounded(LPProblem const& problem, std::vector<Rational> const& point,
                      std::vector<Rational> const& ray) {
  auto const n = problem.num_vars();
  if (!is_feasible(problem, point) || ray.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    auto const& bd = problem.bounds[j];
    if (bd.lower && ray[j] < 0) return false;
    if (bd.upper && ray[j] > 0) return false;
  }
  for (auto const& con : problem.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += con.coeffs[j] * ray[j];
    switch (con.sense) {
      case Sense::LessEqual:
        if (lhs > 0) return false;
        break;
      case Sense::Equal:
        if (lhs != 0) return false;
        break;
      case Sense::GreaterEqual:
        if (lhs < 0) return false;
        break;
    }
  }
  return objective_value(problem, ray) < 0;
}

}  // namespace soplab::qlinalg
