#include "soplab/qlinalg/seminorm.hpp"

#include "soplab/error.hpp"

namespace soplab::qlinalg {

namespace {

void require_ab(FSVector const& v) {
  for (auto const& [bi, c] : v)
    if (bi.kind == Kind::E)
      fail(ErrorKind::UnsupportedBasis, "threshold functional is undefined on " + to_string(bi));
}

bool fgamma_on(std::uint32_t gamma, BasisIndex bi) {
  return bi.kind == Kind::A ? bi.index < gamma : bi.index >= gamma;
}

}  // namespace

Rational ThresholdFunctional::operator()(FSVector const& v) const { return fgamma_eval(gamma, v); }

FSVector ThresholdFunctional::restricted_to(std::vector<BasisIndex> const& coords) const {
  FSVector out;
  for (auto bi : coords) {
    if (bi.kind == Kind::E)
      fail(ErrorKind::UnsupportedBasis, "threshold functional is undefined on " + to_string(bi));
    if (fgamma_on(gamma, bi)) out.set(bi, 1);
  }
  return out;
}

Rational fgamma_eval(std::uint32_t gamma, FSVector const& v) {
  require_ab(v);
  Rational sum = 0;
  for (auto const& [bi, c] : v)
    if (fgamma_on(gamma, bi)) sum += c;
  return sum;
}

std::vector<Rational> fgamma_sweep(FSVector const& v) {
  require_ab(v);
  auto const top = v.max_index();
  if (!top) return {Rational(0)};
  // f_0 is the sum of the b-coefficients; stepping γ → γ+1 switches a_γ on
  // and b_γ off.
  Rational current = 0;
  for (auto const& [bi, c] : v)
    if (bi.kind == Kind::B) current += c;
  std::vector<Rational> out;
  out.reserve(*top + 2);
  out.push_back(current);
  auto it = v.begin();
  for (std::uint32_t g = 0; g <= *top; ++g) {
    for (; it != v.end() && it->first.index == g; ++it)
      current += it->first.kind == Kind::A ? it->second : Rational(-it->second);
    out.push_back(current);
  }
  return out;
}

SweepMax seminorm_b0_argmax(FSVector const& v) {
  auto const values = fgamma_sweep(v);
  SweepMax best{abs(values[0]), 0};
  for (std::uint32_t g = 1; g < values.size(); ++g) {
    Rational a = abs(values[g]);
    if (a > best.value) best = {std::move(a), g};
  }
  return best;
}

Rational seminorm_b0(FSVector const& v) { return seminorm_b0_argmax(v).value; }

}  // namespace soplab::qlinalg
