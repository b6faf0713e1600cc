#include "soplab/qlinalg/fsvector.hpp"

#include <algorithm>

#include "soplab/error.hpp"

namespace soplab::qlinalg {

char kind_letter(Kind kind) {
  switch (kind) {
    case Kind::A:
      return 'A';
    case Kind::B:
      return 'B';
    case Kind::E:
      return 'E';
  }
  return '?';
}

Kind kind_from_letter(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return Kind::A;
    case 'B':
    case 'b':
      return Kind::B;
    case 'E':
    case 'e':
      return Kind::E;
    default:
      break;
  }
  fail(ErrorKind::Parse, std::string("unknown basis kind '") + c + "'");
}

std::string to_string(BasisIndex const& bi) {
  return std::string(1, static_cast<char>(kind_letter(bi.kind) + ('a' - 'A'))) + "_" +
         std::to_string(bi.index);
}

FSVector::FSVector(std::initializer_list<std::pair<BasisIndex, Rational>> entries) {
  for (auto const& [bi, c] : entries) add_to(bi, c);
}

Rational FSVector::coeff(BasisIndex bi) const {
  auto it = entries_.find(bi);
  return it == entries_.end() ? Rational(0) : it->second;
}

void FSVector::set(BasisIndex bi, Rational const& value) {
  if (value == 0)
    entries_.erase(bi);
  else
    entries_[bi] = value;
}

void FSVector::add_to(BasisIndex bi, Rational const& value) {
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace(bi, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

std::vector<BasisIndex> FSVector::support() const {
  std::vector<BasisIndex> out;
  out.reserve(entries_.size());
  for (auto const& [bi, c] : entries_) out.push_back(bi);
  return out;
}

std::optional<std::uint32_t> FSVector::max_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first.index;
}

bool FSVector::only_kinds(std::initializer_list<Kind> kinds) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](auto const& e) {
    return std::find(kinds.begin(), kinds.end(), e.first.kind) != kinds.end();
  });
}

FSVector& FSVector::operator+=(FSVector const& other) {
  for (auto const& [bi, c] : other.entries_) add_to(bi, c);
  return *this;
}

FSVector& FSVector::operator-=(FSVector const& other) {
  for (auto const& [bi, c] : other.entries_) add_to(bi, -c);
  return *this;
}

FSVector& FSVector::operator*=(Rational const& scale) {
  if (scale == 0) {
    entries_.clear();
  } else {
    for (auto& [bi, c] : entries_) c *= scale;
  }
  return *this;
}

FSVector FSVector::operator-() const {
  FSVector out = *this;
  for (auto& [bi, c] : out.entries_) c = -c;
  return out;
}

Rational FSVector::dot(FSVector const& other) const {
  Rational sum = 0;
  auto const& small = size() <= other.size() ? entries_ : other.entries_;
  auto const& large = size() <= other.size() ? other.entries_ : entries_;
  for (auto const& [bi, c] : small) {
    auto it = large.find(bi);
    if (it != large.end()) sum += c * it->second;
  }
  return sum;
}

std::vector<FSVector::Record> FSVector::records() const {
  std::vector<Record> out;
  out.reserve(entries_.size());
  for (auto const& [bi, c] : entries_)
    out.push_back({kind_letter(bi.kind), bi.index, c.get_num().get_str(), c.get_den().get_str()});
  return out;
}

std::string to_string(FSVector const& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (auto const& [bi, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")" + to_string(bi);
  }
  return out;
}

nlohmann::json to_json(FSVector const& v) {
  auto out = nlohmann::json::array();
  for (auto const& r : v.records())
    out.push_back({std::string(1, r.kind), r.index, r.numerator, r.denominator});
  return out;
}

std::size_t rank(std::vector<FSVector> const& family) {
  // Row echelon over the union of supports; each pivot row is keyed by its
  // leading basis symbol.
  std::map<BasisIndex, FSVector> pivots;
  std::size_t r = 0;
  for (FSVector v : family) {
    while (!v.is_zero()) {
      auto const lead = v.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, v);
        ++r;
        break;
      }
      Rational const f = v.coeff(lead) / it->second.coeff(lead);
      v -= f * it->second;
    }
  }
  return r;
}

}  // namespace soplab::qlinalg
