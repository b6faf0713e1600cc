#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "soplab/qlinalg/rational.hpp"

namespace soplab::qlinalg {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LessEqual;
  Rational rhs = 0;
};

/// Missing lower/upper means -inf/+inf. The default is x ≥ 0.
struct VariableBound {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  static VariableBound free() { return {std::nullopt, std::nullopt}; }
  static VariableBound nonneg() { return {}; }
};

/// minimize objective·x subject to the constraints and per-variable bounds.
struct LPProblem {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBound> bounds;

  std::size_t num_vars() const { return objective.size(); }
  /// Adds a variable with the given objective coefficient; returns its index.
  std::size_t add_variable(Rational cost, VariableBound bound = {});
  /// Throws Error(Structural) on dimension mismatches or crossed bounds.
  void validate() const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };
std::string_view to_string(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  /// Optimal value (Optimal only).
  Rational value = 0;
  /// Optimal: an attaining vertex. Unbounded: a feasible point.
  std::vector<Rational> point;
  /// Unbounded: a feasible direction with objective·ray < 0.
  std::vector<Rational> ray;
  /// Infeasible: one multiplier per constraint (≤ rows non-positive, ≥ rows
  /// non-negative); see verify_infeasible for the exact certificate.
  std::vector<Rational> farkas;
  std::size_t pivots = 0;
};

/// Exact two-phase primal simplex with Bland's rule. Free variables are
/// eliminated up front by Gauss-Jordan steps and recovered at the end.
LPSolution minimize(LPProblem const& problem);

/// Every constraint and bound holds exactly at `x`.
bool is_feasible(LPProblem const& problem, std::vector<Rational> const& x);
Rational objective_value(LPProblem const& problem, std::vector<Rational> const& x);

/// Farkas check: with g = Σ y_i a_i, max over the bound box of g·x is finite
/// and strictly below Σ y_i b_i, while each y_i has the sign its row allows.
bool verify_infeasible(LPProblem const& problem, std::vector<Rational> const& y);

/// `point` feasible, `ray` a recession direction of the feasible set, and
/// objective·ray < 0.
bool verify_unbounded(LPProblem const& problem, std::vector<Rational> const& point,
                      std::vector<Rational> const& ray);

}  // namespace soplab::qlinalg
