#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "soplab/groups/word.hpp"

namespace soplab::groups {

struct Presentation {
  std::string name;
  std::vector<GenSymbol> generators;
  std::vector<GroupWord> relators;

  bool has_generator(GenSymbol const& g) const;
  /// Throws Error(Structural) on duplicate generators, relators that are not
  /// freely reduced, or relators over undeclared generators.
  void validate() const;
  /// Generator line followed by one relator per line.
  std::string to_text() const;
};

/// First non-comment line lists generators (spaces or commas); each further
/// non-empty line is a relator. '#' starts a comment. Relators are freely
/// reduced on input; empty relators are dropped. Throws Error(Parse).
Presentation parse_presentation(std::string_view text, std::string name = "custom");

/// Named presets: "triangle", "two-cycle", "higman", "chain-k" (k ≥ 2,
/// generators x0..x{k-1}, Sq(x_i, x_j) for i < j) and "cyclic-N" (⟨a | a^N⟩).
/// Throws Error(Usage) for unknown names.
Presentation preset(std::string_view name);
std::vector<std::string> preset_names();

/// Relator sets compared up to order and duplicates.
bool same_relator_set(std::vector<GroupWord> a, std::vector<GroupWord> b);

}  // namespace soplab::groups
