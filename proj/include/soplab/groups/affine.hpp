#pragma once

#include <string>

#include "soplab/groups/word.hpp"
#include "soplab/qlinalg/rational.hpp"
#include "soplab/report.hpp"

namespace soplab::groups {

using qlinalg::Rational;

/// t ↦ 2^k·t + q with q dyadic. Composition follows function notation:
/// (f * g)(t) = f(g(t)), so a word w₁w₂…wₙ acts as w₁∘w₂∘…∘wₙ.
class AffineDyadicMap {
 public:
  AffineDyadicMap() = default;
  /// Throws Error(Domain) when the offset is not dyadic.
  AffineDyadicMap(long scale_exp, Rational offset);

  static AffineDyadicMap identity() { return {}; }
  static AffineDyadicMap translation(Rational q) { return {0, std::move(q)}; }
  static AffineDyadicMap scaling(long k) { return {k, Rational(0)}; }

  long scale_exp() const { return k_; }
  Rational const& offset() const { return q_; }
  bool is_identity() const { return k_ == 0 && q_ == 0; }

  Rational apply(Rational const& t) const;
  AffineDyadicMap inverse() const;
  AffineDyadicMap pow(long n) const;

  friend AffineDyadicMap operator*(AffineDyadicMap const& f, AffineDyadicMap const& g);
  friend bool operator==(AffineDyadicMap const&, AffineDyadicMap const&) = default;

 private:
  long k_ = 0;
  Rational q_{0};
};

std::string to_string(AffineDyadicMap const& f);  // "t -> 2^-1 t + 0/1"

/// The faithful model of BS(1,2) = ⟨a, b | b⁻¹ab = a²⟩: a is t ↦ t + 1 and
/// b is t ↦ t/2. Throws Error(Domain) for letters other than a and b.
AffineDyadicMap bs12_generator(GenSymbol const& g);
AffineDyadicMap evaluate_bs12(GroupWord const& w);

/// Exact check of the length-2 chain x₀ = a, x₁ = b: x₁⁻¹x₀x₁ = x₀², both
/// non-identity and distinct; also records that the reversed relation fails.
CheckReport bs12_chain_check();

}  // namespace soplab::groups
