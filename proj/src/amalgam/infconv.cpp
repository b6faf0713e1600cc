#include <map>

#include "soplab/amalgam/space.hpp"
#include "soplab/error.hpp"
#include "soplab/qlinalg/lp.hpp"

namespace soplab::amalgam {

using qlinalg::LinearConstraint;
using qlinalg::LPProblem;
using qlinalg::Sense;
using qlinalg::VariableBound;

InfConvResult infimal_convolution(std::vector<PolyhedralNorm> const& blocks, FSVector const& t) {
  if (blocks.empty()) fail(ErrorKind::Shape, "infimal convolution of no blocks");
  LPProblem lp;
  // One free variable per (block, coordinate), then u_k ≥ 0 bounding N_k(t_k).
  std::vector<std::map<BasisIndex, std::size_t>> var(blocks.size());
  std::map<BasisIndex, std::vector<std::size_t>> sharing;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (auto c : blocks[k].coords()) {
      auto const v = lp.add_variable(0, VariableBound::free());
      var[k][c] = v;
      sharing[c].push_back(v);
    }
  std::vector<std::size_t> u;
  for (std::size_t k = 0; k < blocks.size(); ++k) u.push_back(lp.add_variable(1));
  auto const nv = lp.num_vars();

  for (auto const& [c, x] : t)
    if (!sharing.count(c))
      fail(ErrorKind::Domain, "coordinate " + qlinalg::to_string(c) + " is in no block");
  for (auto const& [c, vars] : sharing) {
    LinearConstraint row{std::vector<Rational>(nv), Sense::Equal, t.coeff(c)};
    for (auto v : vars) row.coeffs[v] = 1;
    lp.constraints.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (auto const& f : blocks[k].functionals())
      for (int sign : {1, -1}) {
        LinearConstraint row{std::vector<Rational>(nv), Sense::LessEqual, 0};
        for (auto const& [c, x] : f) row.coeffs[var[k].at(c)] = sign * x;
        row.coeffs[u[k]] = -1;
        lp.constraints.push_back(std::move(row));
      }

  auto const sol = qlinalg::minimize(lp);
  if (sol.status != qlinalg::LPStatus::Optimal)
    fail(ErrorKind::Consistency,
         "infimal convolution LP is " + std::string(qlinalg::to_string(sol.status)));
  InfConvResult out;
  out.value = sol.value;
  out.pivots = sol.pivots;
  Rational total = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    FSVector tk;
    for (auto const& [c, v] : var[k]) tk.set(c, sol.point[v]);
    total += blocks[k].value(tk);
    out.decomposition.blocks.push_back(std::move(tk));
  }
  if (total != out.value || out.decomposition.sum() != t)
    fail(ErrorKind::Consistency, "LP decomposition does not attain its value");
  return out;
}

InfConvResult infconv_norm(AmalgamSpace const& space, FSVector const& t, NormTag tag) {
  if (!space.contains(t)) fail(ErrorKind::Domain, "vector is outside V_m");
  return infimal_convolution(space.block_norms(tag), t);
}

}  // namespace soplab::amalgam
