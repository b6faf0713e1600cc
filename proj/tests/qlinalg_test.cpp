#include <doctest.h>

#include <random>

#include "soplab/error.hpp"
#include "soplab/qlinalg/fsvector.hpp"
#include "soplab/qlinalg/polyhedral_norm.hpp"
#include "soplab/qlinalg/seminorm.hpp"
#include "support/random.hpp"

using namespace soplab;
using namespace soplab::qlinalg;

TEST_CASE("rational formatting is p/q and lossless") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-3)) == "-3/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK(height(make_rational(-5, 3)) == 5);
  CHECK(is_dyadic(make_rational(3, 8)));
  CHECK_FALSE(is_dyadic(make_rational(1, 3)));
}

TEST_CASE("fsvector never stores zero coefficients") {
  FSVector v{{a_(0), 1}, {b_(0), 2}};
  v.add_to(a_(0), -1);
  CHECK(v.size() == 1);
  CHECK(v.coeff(a_(0)) == 0);
  v *= 0;
  CHECK(v.is_zero());
  FSVector w{{a_(2), 1}, {a_(2), -1}};
  CHECK(w.is_zero());
}

TEST_CASE("basis order is by index, then kind") {
  CHECK(a_(0) < b_(0));
  CHECK(b_(0) < a_(1));
  CHECK(b_(3) < e_(3));
}

TEST_CASE("rank over Q") {
  CHECK(rank({FSVector{{e_(0), 1}}, FSVector{{e_(1), 1}}, FSVector{{e_(0), 1}, {e_(1), 1}}}) == 2);
  CHECK(rank({}) == 0);
}

TEST_CASE("threshold functional values") {
  CHECK(fgamma_eval(0, FSVector::unit(a_(0))) == 0);
  CHECK(fgamma_eval(1, FSVector::unit(a_(0))) == 1);
  CHECK(fgamma_eval(0, FSVector::unit(b_(0))) == 1);
  FSVector v{{a_(0), 1}, {a_(1), -1}, {b_(0), 1}, {b_(1), -1}};
  CHECK(fgamma_eval(2, v) == 0);
  CHECK_THROWS_AS(fgamma_eval(0, FSVector::unit(e_(0))), Error);
  try {
    seminorm_b0(FSVector::unit(e_(1)));
    FAIL("expected unsupported-basis");
  } catch (Error const& err) {
    CHECK(err.kind() == ErrorKind::UnsupportedBasis);
  }
}

TEST_CASE("B0 seminorm examples") {
  CHECK(seminorm_b0(FSVector{{a_(0), 1}, {a_(1), -1}, {b_(1), -1}, {b_(0), 1}}) == 0);
  CHECK(seminorm_b0(FSVector{}) == 0);
  CHECK(seminorm_b0(FSVector::unit(a_(0))) == 1);
  CHECK(seminorm_b0(FSVector{{a_(0), 3}, {b_(0), 4}}) == 4);
}

TEST_CASE("sweep range is exhaustive: larger thresholds change nothing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto v = testing::random_ab_vector(rng, 9, 6, 16);
    auto const sweep = fgamma_sweep(v);
    auto const top = v.max_index().value_or(0);
    for (std::uint32_t g = 0; g < sweep.size(); ++g) CHECK(sweep[g] == fgamma_eval(g, v));
    for (std::uint32_t g = top + 1; g < top + 40; ++g) CHECK(fgamma_eval(g, v) == sweep.back());
  }
}

TEST_CASE("seminorm axioms hold exactly on random vectors") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    auto u = testing::random_ab_vector(rng, 8, 5, 16);
    auto v = testing::random_ab_vector(rng, 8, 5, 16);
    auto lambda = testing::random_rational(rng, 16);
    CHECK(seminorm_b0(u) >= 0);
    CHECK(seminorm_b0(lambda * u) == abs(lambda) * seminorm_b0(u));
    CHECK(seminorm_b0(u + v) <= seminorm_b0(u) + seminorm_b0(v));
  }
}

TEST_CASE("pair sequence is order-indiscernible for the seminorm") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 4), gap(1, 3);
  for (int trial = 0; trial < 400; ++trial) {
    int const k = len(rng);
    std::vector<Rational> lam, mu;
    for (int i = 0; i < k; ++i) {
      lam.push_back(testing::random_rational(rng, 12));
      mu.push_back(testing::random_rational(rng, 12));
    }
    auto build = [&](std::uint32_t start) {
      FSVector v;
      std::uint32_t idx = start;
      for (int i = 0; i < k; ++i) {
        v.add_to(a_(idx), lam[i]);
        v.add_to(b_(idx), mu[i]);
        idx += static_cast<std::uint32_t>(gap(rng));
      }
      return v;
    };
    CHECK(seminorm_b0(build(0)) == seminorm_b0(build(static_cast<std::uint32_t>(gap(rng) * 5))));
  }
}

TEST_CASE("polyhedral norm: max-abs examples and domain errors") {
  auto const n = PolyhedralNorm::max_abs({e_(0), e_(1)});
  CHECK(n(FSVector::unit(e_(0))) == 1);
  CHECK(n(FSVector{{e_(0), 2}, {e_(1), -3}}) == 3);
  CHECK(n(FSVector{}) == 0);
  CHECK_THROWS_AS(n(FSVector::unit(e_(2))), Error);
}

TEST_CASE("restricted B0 norm agrees with the sweep on its subspace") {
  std::vector<BasisIndex> coords{a_(2), b_(2), a_(5), b_(5)};
  auto const n = PolyhedralNorm::b0_restricted(coords);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    FSVector v;
    for (auto c : coords) v.set(c, testing::random_rational(rng, 9));
    CHECK(n(v) == seminorm_b0(v));
  }
  // f_γ for γ ∈ {0,...,6} collapses to three distinct functionals here.
  CHECK(n.functionals().size() == 3);
}

TEST_CASE("pointwise max and pullback") {
  auto const base = PolyhedralNorm::max_abs({e_(0), e_(1)});
  auto swapped = base.pullback({e_(0), e_(1)}, [](BasisIndex c) { return FSVector{{c, 2}}; });
  CHECK(swapped(FSVector{{e_(0), 1}, {e_(1), -1}}) == 2);
  auto both = base.pointwise_max(swapped);
  CHECK(both(FSVector::unit(e_(1))) == 2);
}
