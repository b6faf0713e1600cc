#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "soplab/qlinalg/rational.hpp"

namespace soplab::qlinalg {

/// A: the a_α basis symbols, B: the b_α symbols, E: generic coordinates
/// (e_i) for test spaces and formal amalgam bases.
enum class Kind : std::uint8_t { A = 0, B = 1, E = 2 };

char kind_letter(Kind kind);
Kind kind_from_letter(char c);

/// Basis symbol, ordered by (index, kind).
struct BasisIndex {
  Kind kind = Kind::E;
  std::uint32_t index = 0;

  friend bool operator==(BasisIndex const&, BasisIndex const&) = default;
  friend std::strong_ordering operator<=>(BasisIndex const& x, BasisIndex const& y) {
    if (auto c = x.index <=> y.index; c != 0) return c;
    return static_cast<int>(x.kind) <=> static_cast<int>(y.kind);
  }
};

inline BasisIndex a_(std::uint32_t i) { return {Kind::A, i}; }
inline BasisIndex b_(std::uint32_t i) { return {Kind::B, i}; }
inline BasisIndex e_(std::uint32_t i) { return {Kind::E, i}; }

std::string to_string(BasisIndex const& bi);

/// Finite-support vector with exact rational coefficients. Zero coefficients
/// are never stored, so equality of vectors is equality of the maps.
class FSVector {
 public:
  using Map = std::map<BasisIndex, Rational>;

  FSVector() = default;
  FSVector(std::initializer_list<std::pair<BasisIndex, Rational>> entries);

  static FSVector unit(BasisIndex bi) { return FSVector{{bi, Rational(1)}}; }

  Rational coeff(BasisIndex bi) const;
  void set(BasisIndex bi, Rational const& value);
  void add_to(BasisIndex bi, Rational const& value);

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Map const& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::vector<BasisIndex> support() const;
  /// Largest index in the support; nullopt for the zero vector.
  std::optional<std::uint32_t> max_index() const;
  bool only_kinds(std::initializer_list<Kind> kinds) const;

  FSVector& operator+=(FSVector const& other);
  FSVector& operator-=(FSVector const& other);
  FSVector& operator*=(Rational const& scale);
  FSVector operator-() const;

  friend FSVector operator+(FSVector lhs, FSVector const& rhs) { return lhs += rhs; }
  friend FSVector operator-(FSVector lhs, FSVector const& rhs) { return lhs -= rhs; }
  friend FSVector operator*(Rational const& s, FSVector v) { return v *= s; }
  friend FSVector operator*(FSVector v, Rational const& s) { return v *= s; }
  friend bool operator==(FSVector const&, FSVector const&) = default;

  /// Σ coeff_i · other_i over the common support.
  Rational dot(FSVector const& other) const;

  /// Re-indexes every basis symbol through `f`; coefficients of symbols that
  /// collide are summed.
  template <typename F>
  FSVector reindexed(F&& f) const {
    FSVector out;
    for (auto const& [bi, c] : entries_) out.add_to(f(bi), c);
    return out;
  }

  /// Sorted (kind, index, numerator, denominator) records.
  struct Record {
    char kind;
    std::uint32_t index;
    std::string numerator;
    std::string denominator;
  };
  std::vector<Record> records() const;

 private:
  Map entries_;
};

std::string to_string(FSVector const& v);
/// Array of [kind, index, numerator, denominator] records.
nlohmann::json to_json(FSVector const& v);

/// Rank over ℚ of a family of vectors (exact Gaussian elimination).
std::size_t rank(std::vector<FSVector> const& family);

}  // namespace soplab::qlinalg
