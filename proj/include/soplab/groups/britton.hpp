#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "soplab/groups/affine.hpp"
#include "soplab/report.hpp"

namespace soplab::groups {

/// g₀ t^{ε₁} g₁ … t^{ε_r} g_r with base elements in the affine model.
struct HNNWord {
  std::vector<AffineDyadicMap> g{AffineDyadicMap::identity()};
  std::vector<int> eps;

  std::size_t stable_letters() const { return eps.size(); }
  int stable_exponent_sum() const;
};

/// Splits a word over {a, b, stable} at the stable letter and evaluates the
/// pieces in BS(1,2). Throws Error(Domain) for other generators.
HNNWord hnn_from_word(GroupWord const& w, GenSymbol const& stable = "c");

/// Base group data for the HNN extension t⁻¹ g t = φ(g), g ∈ A, φ(A) = B.
struct BaseOracle {
  std::function<bool(AffineDyadicMap const&)> in_a;
  std::function<bool(AffineDyadicMap const&)> in_b;
  std::function<AffineDyadicMap(AffineDyadicMap const&)> phi;
  std::function<AffineDyadicMap(AffineDyadicMap const&)> phi_inv;
  /// Independent evaluation of φ(g), used to check every rewrite.
  std::function<AffineDyadicMap(AffineDyadicMap const&)> phi_reference;
};

/// The path group ⟨a, b, c | Sq(a, b), Sq(b, c)⟩ over BS(1,2): A = ⟨b⟩ (pure
/// scalings), B = ⟨b²⟩ (even scalings), φ(bᵏ) = b²ᵏ.
BaseOracle path_group_oracle();

struct BrittonStep {
  std::size_t position = 0;  // index of the stable letter that opened the pinch
  int eps = 0;               // -1 for t⁻¹gt, +1 for tgt⁻¹
  AffineDyadicMap inner, image;
};

struct BrittonForm {
  HNNWord word;
  std::vector<BrittonStep> log;

  /// Valid for reduced forms: r ≥ 1, or r = 0 and g₀ ≠ e.
  bool nontrivial() const { return word.stable_letters() > 0 || !word.g[0].is_identity(); }
  bool has_pinch(BaseOracle const& oracle) const;
};

/// Removes pinches left to right until none remain. Each rewrite is checked
/// against oracle.phi_reference; a mismatch throws Error(Consistency).
BrittonForm britton_reduce(HNNWord const& w, BaseOracle const& oracle);

nlohmann::json to_json(HNNWord const& w);

/// Reduces a word of the path group and reports its normal form. Passes when
/// every rewrite checked out and the result has no pinch; the value
/// "nontrivial" records the Britton verdict.
CheckReport britton_check(GroupWord const& w);

}  // namespace soplab::groups
