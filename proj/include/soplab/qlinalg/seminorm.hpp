#pragma once

#include <cstdint>
#include <vector>

#include "soplab/qlinalg/fsvector.hpp"

namespace soplab::qlinalg {

/// The threshold functional f_γ on span{a_α, b_α}: a_α ↦ [α < γ],
/// b_α ↦ [α ≥ γ].
struct ThresholdFunctional {
  std::uint32_t gamma = 0;

  Rational operator()(FSVector const& v) const;
  /// Coefficient map of f_γ restricted to `coords` (zero entries dropped).
  FSVector restricted_to(std::vector<BasisIndex> const& coords) const;
};

/// Throws Error(UnsupportedBasis) when v has an E-tagged symbol.
Rational fgamma_eval(std::uint32_t gamma, FSVector const& v);

/// Values f_γ(v) for γ = 0 … maxSupportIndex+1 (a single entry for v = 0).
/// f_γ is constant in γ beyond maxSupportIndex, so this list is exhaustive.
std::vector<Rational> fgamma_sweep(FSVector const& v);

struct SweepMax {
  Rational value;
  std::uint32_t gamma = 0;  // smallest γ attaining the max
};

/// sup_γ |f_γ(v)|, computed as a max over the exhaustive sweep range.
Rational seminorm_b0(FSVector const& v);
SweepMax seminorm_b0_argmax(FSVector const& v);

/// Equality in the quotient by the seminorm kernel.
inline bool equal_mod_kernel(FSVector const& u, FSVector const& v) {
  return seminorm_b0(u - v) == 0;
}

}  // namespace soplab::qlinalg
