#pragma once

// Independent infimal-convolution oracle for chains of blocks over
// e_0 … e_k (block p = span(e_p, e_{p+1})), optionally sharing a star
// coordinate. The LP is parametrized by transfer amounts on shared
// coordinates and solved by vertex enumeration.

#include <cstdlib>
#include <random>
#include <vector>

#include "soplab/qlinalg/polyhedral_norm.hpp"
#include "support/random.hpp"
#include "support/vertex_enum.hpp"

namespace soplab::testing {

struct ChainInstance {
  std::size_t blocks = 1;
  bool star = false;
  qlinalg::BasisIndex star_coord{qlinalg::Kind::E, 100};
  std::vector<qlinalg::PolyhedralNorm> norms;
  qlinalg::FSVector t;
};

struct Affine {  // c0 + Σ c_j z_j
  Rational c0 = 0;
  std::vector<Rational> c;
};

inline Rational oracle_infconv(ChainInstance const& in) {
  using qlinalg::e_;
  auto const k = in.blocks;
  std::size_t const nx = k - 1, ny = in.star ? k - 1 : 0, nv = nx + ny + k;
  auto fresh = [&] { return Affine{0, std::vector<Rational>(nv)}; };
  // t_p[coord] as an affine function of the parameters.
  std::vector<std::vector<std::pair<qlinalg::BasisIndex, Affine>>> parts(k);
  for (std::size_t i = 0; i <= k; ++i) {
    auto const total = in.t.coeff(e_(static_cast<std::uint32_t>(i)));
    if (i == 0 || i == k) {
      auto a = fresh();
      a.c0 = total;
      parts[i == 0 ? 0 : k - 1].push_back({e_(static_cast<std::uint32_t>(i)), a});
      continue;
    }
    auto lo = fresh(), hi = fresh();
    lo.c[i - 1] = 1;
    hi.c0 = total;
    hi.c[i - 1] = -1;
    parts[i - 1].push_back({e_(static_cast<std::uint32_t>(i)), lo});
    parts[i].push_back({e_(static_cast<std::uint32_t>(i)), hi});
  }
  if (in.star) {
    auto last = fresh();
    last.c0 = in.t.coeff(in.star_coord);
    for (std::size_t p = 0; p + 1 < k; ++p) {
      auto a = fresh();
      a.c[nx + p] = 1;
      last.c[nx + p] = -1;
      parts[p].push_back({in.star_coord, a});
    }
    parts[k - 1].push_back({in.star_coord, last});
  }
  qlinalg::LPProblem lp;
  for (std::size_t j = 0; j < nx + ny; ++j) lp.add_variable(0, qlinalg::VariableBound::free());
  for (std::size_t p = 0; p < k; ++p) lp.add_variable(1);
  for (std::size_t p = 0; p < k; ++p)
    for (auto const& f : in.norms[p].functionals())
      for (int sign : {1, -1}) {
        qlinalg::LinearConstraint row{std::vector<Rational>(nv), qlinalg::Sense::LessEqual, 0};
        for (auto const& [c, a] : parts[p]) {
          Rational const w = sign * f.coeff(c);
          row.rhs -= w * a.c0;
          for (std::size_t j = 0; j < nv; ++j) row.coeffs[j] += w * a.c[j];
        }
        row.coeffs[nx + ny + p] -= 1;
        lp.constraints.push_back(std::move(row));
      }
  return enumerate_vertices(lp).value;
}

// Up to three blocks (star only with at most two), so the oracle LP has at
// most six variables.
inline ChainInstance random_chain_instance(std::mt19937_64& rng) {
  using qlinalg::e_;
  std::uniform_int_distribution<int> coef(-4, 4), nblocks(1, 3);
  std::bernoulli_distribution coin(0.5);
  ChainInstance in;
  in.blocks = static_cast<std::size_t>(nblocks(rng));
  in.star = in.blocks <= 2 && coin(rng);
  for (std::size_t p = 0; p < in.blocks; ++p) {
    std::vector<qlinalg::BasisIndex> coords{e_(static_cast<std::uint32_t>(p)),
                                            e_(static_cast<std::uint32_t>(p + 1))};
    if (in.star) coords.push_back(in.star_coord);
    std::vector<qlinalg::FSVector> fs;
    for (auto c : coords) fs.push_back(qlinalg::FSVector{{c, 1 + std::abs(coef(rng))}});
    qlinalg::FSVector mix;
    for (auto c : coords) mix.set(c, coef(rng));
    fs.push_back(mix);
    in.norms.emplace_back(coords, fs);
  }
  for (std::uint32_t i = 0; i <= in.blocks; ++i) in.t.set(e_(i), random_rational(rng, 5));
  if (in.star) in.t.set(in.star_coord, random_rational(rng, 5));
  return in;
}

inline std::size_t oracle_variables(ChainInstance const& in) {
  return 2 * in.blocks - 1 + (in.star ? in.blocks - 1 : 0);
}

}  // namespace soplab::testing
