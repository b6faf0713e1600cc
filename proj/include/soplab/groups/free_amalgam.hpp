#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "soplab/groups/presentation.hpp"

namespace soplab::groups {

using Renaming = std::vector<std::pair<GenSymbol, GenSymbol>>;

/// A presentation of a pair group ⟨x̄, ȳ, H⁻⟩: the designated tuples x̄ and ȳ,
/// the constant generators spanning H⁻, and any auxiliary generators (those
/// listed in `generators` but in none of the three groups).
struct AdjacencyType {
  std::string name;
  std::vector<GenSymbol> generators;
  std::vector<GenSymbol> first, second, constants;
  std::vector<GroupWord> relators;

  std::vector<GenSymbol> auxiliary() const;
  /// Throws Error(Construction): tuples of unequal or zero length, tuples or
  /// constants overlapping, undeclared symbols, or an invalid presentation.
  void validate() const;

  static AdjacencyType sq_pair();       // ⟨x, y | Sq(x, y)⟩
  static AdjacencyType free_pair();     // ⟨x, y⟩
  static AdjacencyType central_pair();  // ⟨x, y, z | [x, z], [y, z]⟩ with H⁻ = ⟨z⟩
  /// Throws Error(Usage) for unknown names.
  static AdjacencyType by_name(std::string_view name);
};

/// One adjacent pair (b̄_i, b̄_j) of the quadrilateral and the renaming that
/// sends the type's symbols to K's generators.
struct PairInstance {
  int i = 0, j = 0;
  Renaming substitution;
  std::string label() const;  // "(a3,a0)"
};

/// K = K₁ *_{K₀} K₂ with K₀ = H₀ *_{H⁻} H₂, K₁ = H_{0,1} *_{H₁,H⁻} H_{1,2},
/// K₂ = H_{2,3} *_{H₃,H⁻} H_{3,0}.
struct AmalgamPresentation {
  std::vector<Presentation> pair_groups;  // H_{0,1}, H_{1,2}, H_{2,3}, H_{3,0}
  std::vector<PairInstance> pairs;        // matching the pair groups
  Presentation k0, k1, k2;
  /// Images of K₀'s generators in the factors.
  std::vector<std::pair<GenSymbol, GroupWord>> into_k1, into_k2;
  std::vector<std::string> notes;
};

struct FreeAmalgam {
  AmalgamPresentation data;
  Presentation k;  // flattened
};

/// Name of slot ℓ of tuple i in K: "a{i}" for 1-tuples, "a{i}_{ℓ}" otherwise.
GenSymbol tuple_symbol(int i, std::size_t slot, std::size_t length);

/// Builds the four pair groups, the amalgam data and the flattened K. With
/// `relabel` the pair (3, 0) is H_{3,0}, in which b̄₃ plays x̄ and b̄₀ plays ȳ;
/// without it the pair is taken in index order. Throws Error(Construction)
/// when the identification maps are not injective.
FreeAmalgam build_free_amalgam(AdjacencyType const& type, bool relabel = true);

nlohmann::json to_json(AmalgamPresentation const& a);

}  // namespace soplab::groups
