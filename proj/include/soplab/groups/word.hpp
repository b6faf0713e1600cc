#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace soplab::groups {

using GenSymbol = std::string;

struct Letter {
  GenSymbol gen;
  int exp = 1;  // ±1

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

/// A word over named generators. Products and inverses keep words freely
/// reduced; the raw constructor does not, so free_reduce is explicit.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  /// x^k as |k| letters.
  static GroupWord power(GenSymbol const& gen, int k);

  std::vector<Letter> const& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }

  GroupWord inverse() const;
  bool is_reduced() const;
  /// Rotation starting at letter i.
  GroupWord rotated(std::size_t i) const;

  friend GroupWord operator*(GroupWord const& a, GroupWord const& b);
  friend bool operator==(GroupWord const&, GroupWord const&) = default;
  friend auto operator<=>(GroupWord const&, GroupWord const&) = default;

 private:
  std::vector<Letter> letters_;
};

GroupWord free_reduce(GroupWord const& w);
/// Free reduction followed by cancelling inverse letters at the two ends.
GroupWord cyclic_reduce(GroupWord const& w);
/// u is a cyclic rotation of v or of v⁻¹ (both taken cyclically reduced).
bool cyclically_equivalent(GroupWord const& u, GroupWord const& v);

/// Sq(x, y) = y⁻¹·x·y·x⁻², i.e. the relation x^y = x².
GroupWord sq_relator(GenSymbol const& x, GenSymbol const& y);
/// [x, y] = x⁻¹y⁻¹xy.
GroupWord commutator(GenSymbol const& x, GenSymbol const& y);

/// Letter-exponent notation with runs collapsed: "B-1 A B A-2".
std::string to_string(GroupWord const& w);

/// Parses letter-exponent notation against the given generator names. Each
/// token is the longest matching generator name followed by an optional
/// exponent ("A", "A-2", "A^-1", "a0^3"). Throws Error(Parse).
GroupWord parse_word(std::string_view text, std::vector<GenSymbol> const& generators);

/// Applies a generator renaming (unlisted generators stay).
GroupWord rename(GroupWord const& w, std::vector<std::pair<GenSymbol, GenSymbol>> const& map);

}  // namespace soplab::groups
