#include <doctest.h>

#include <random>

#include "soplab/error.hpp"
#include "soplab/qlinalg/lp.hpp"
#include "support/random.hpp"
#include "support/vertex_enum.hpp"

using namespace soplab;
using namespace soplab::qlinalg;

namespace {

LinearConstraint row(std::vector<long> a, Sense s, long b) {
  LinearConstraint c;
  for (auto x : a) c.coeffs.emplace_back(x);
  c.sense = s;
  c.rhs = b;
  return c;
}

}  // namespace

TEST_CASE("minimize x subject to x >= 3") {
  LPProblem p;
  p.add_variable(1, VariableBound::free());
  p.constraints.push_back(row({1}, Sense::GreaterEqual, 3));
  auto s = minimize(p);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.value == 3);
  CHECK(s.point[0] == 3);
}

TEST_CASE("minimize x+y on the simplex edge x+y = 1") {
  LPProblem p;
  p.add_variable(1);
  p.add_variable(1);
  p.constraints.push_back(row({1, 1}, Sense::Equal, 1));
  auto s = minimize(p);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.value == 1);
  CHECK(is_feasible(p, s.point));
}

TEST_CASE("bounds of every shape") {
  LPProblem p;
  p.add_variable(-1, {Rational(-2), Rational(5)});  // boxed
  p.add_variable(1, {std::nullopt, Rational(4)});   // upper only
  p.add_variable(-1, VariableBound::free());
  p.constraints.push_back(row({0, -1, 1}, Sense::LessEqual, 1));
  p.constraints.push_back(row({0, 1, 0}, Sense::GreaterEqual, -7));
  auto s = minimize(p);
  REQUIRE(s.status == LPStatus::Optimal);
  // optimum x0 = 5 with x2 = x1 + 1: -5 + x1 - (x1 + 1)
  CHECK(s.value == -6);
  CHECK(is_feasible(p, s.point));
}

TEST_CASE("infeasible problems carry a verified Farkas certificate") {
  LPProblem p;
  p.add_variable(0);
  p.add_variable(0);
  p.constraints.push_back(row({1, 1}, Sense::LessEqual, 1));
  p.constraints.push_back(row({1, 1}, Sense::GreaterEqual, 3));
  auto s = minimize(p);
  REQUIRE(s.status == LPStatus::Infeasible);
  CHECK(verify_infeasible(p, s.farkas));

  LPProblem q;
  q.add_variable(1, VariableBound::free());
  q.add_variable(1, {Rational(0), Rational(1)});
  q.constraints.push_back(row({1, -1}, Sense::Equal, 0));
  q.constraints.push_back(row({1, 0}, Sense::GreaterEqual, 2));
  auto t = minimize(q);
  REQUIRE(t.status == LPStatus::Infeasible);
  CHECK(verify_infeasible(q, t.farkas));
}

TEST_CASE("unbounded problems carry a verified ray") {
  LPProblem p;
  p.add_variable(-1);
  p.add_variable(0, VariableBound::free());
  p.constraints.push_back(row({1, -1}, Sense::LessEqual, 2));
  auto s = minimize(p);
  REQUIRE(s.status == LPStatus::Unbounded);
  CHECK(verify_unbounded(p, s.point, s.ray));

  LPProblem q;  // free variable absent from every row
  q.add_variable(1, VariableBound::free());
  q.add_variable(0);
  q.constraints.push_back(row({0, 1}, Sense::LessEqual, 2));
  auto t = minimize(q);
  REQUIRE(t.status == LPStatus::Unbounded);
  CHECK(verify_unbounded(q, t.point, t.ray));
}

TEST_CASE("malformed dimensions are structural errors") {
  LPProblem p;
  p.add_variable(1);
  p.constraints.push_back(row({1, 1}, Sense::LessEqual, 1));
  try {
    minimize(p);
    FAIL("expected structural error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::Structural);
  }
  LPProblem q;
  q.objective = {Rational(1)};
  CHECK_THROWS_AS(minimize(q), Error);
}

TEST_CASE("degenerate cycling example terminates under Bland's rule") {
  // Beale's example, which cycles under the textbook largest-coefficient rule.
  LPProblem p;
  for (auto c : {make_rational(-3, 4), make_rational(150), make_rational(-1, 50), make_rational(6)})
    p.add_variable(c);
  LinearConstraint r1{{make_rational(1, 4), Rational(-60), make_rational(-1, 25), Rational(9)},
                      Sense::LessEqual,
                      0};
  LinearConstraint r2{{make_rational(1, 2), Rational(-90), make_rational(-1, 50), Rational(3)},
                      Sense::LessEqual,
                      0};
  LinearConstraint r3{{Rational(0), Rational(0), Rational(1), Rational(0)}, Sense::LessEqual, 1};
  p.constraints = {r1, r2, r3};
  auto s = minimize(p);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.value == make_rational(-1, 20));
}

TEST_CASE("simplex agrees with basic-solution enumeration on small random LPs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> nv(1, 6), nc(1, 7), sense(0, 2), coin(0, 3);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 250; ++trial) {
    LPProblem p;
    int const n = nv(rng);
    for (int j = 0; j < n; ++j) p.add_variable(testing::random_rational(rng, 6));
    int const m = nc(rng);
    for (int i = 0; i < m; ++i) {
      LinearConstraint c;
      for (int j = 0; j < n; ++j)
        c.coeffs.push_back(coin(rng) == 0 ? Rational(0) : testing::random_rational(rng, 5));
      c.sense = static_cast<Sense>(sense(rng));
      c.rhs = testing::random_rational(rng, 8);
      p.constraints.push_back(std::move(c));
    }
    // keeps the polytope bounded: sum x <= 10
    LinearConstraint cap;
    cap.coeffs.assign(static_cast<std::size_t>(n), Rational(1));
    cap.rhs = 10;
    p.constraints.push_back(std::move(cap));

    auto const lp = minimize(p);
    auto const bf = testing::enumerate_vertices(p);
    if (bf.feasible_vertex_found) {
      REQUIRE(lp.status == LPStatus::Optimal);
      CHECK(lp.value == bf.value);
      CHECK(is_feasible(p, lp.point));
      ++optimal;
    } else {
      REQUIRE(lp.status == LPStatus::Infeasible);
      CHECK(verify_infeasible(p, lp.farkas));
      ++infeasible;
    }
  }
  CHECK(optimal > 50);
  CHECK(infeasible > 10);
}
