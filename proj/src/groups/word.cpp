#include "soplab/groups/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "soplab/error.hpp"

namespace soplab::groups {

GroupWord GroupWord::power(GenSymbol const& gen, int k) {
  std::vector<Letter> out(static_cast<std::size_t>(std::abs(k)), Letter{gen, k < 0 ? -1 : 1});
  return GroupWord(std::move(out));
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return GroupWord(std::move(out));
}

bool GroupWord::is_reduced() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i + 1] == letters_[i].inverse()) return false;
  return true;
}

GroupWord GroupWord::rotated(std::size_t i) const {
  if (letters_.empty()) return *this;
  auto out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i % out.size()), out.end());
  return GroupWord(std::move(out));
}

GroupWord operator*(GroupWord const& a, GroupWord const& b) {
  auto out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return free_reduce(GroupWord(std::move(out)));
}

GroupWord free_reduce(GroupWord const& w) {
  std::vector<Letter> stack;
  for (auto const& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return GroupWord(std::move(stack));
}

GroupWord cyclic_reduce(GroupWord const& w) {
  auto const reduced = free_reduce(w);
  auto const& r = reduced.letters();
  std::size_t b = 0, e = r.size();
  while (e - b >= 2 && r[e - 1] == r[b].inverse()) ++b, --e;
  return GroupWord(
      {r.begin() + static_cast<std::ptrdiff_t>(b), r.begin() + static_cast<std::ptrdiff_t>(e)});
}

bool cyclically_equivalent(GroupWord const& u, GroupWord const& v) {
  auto const cu = cyclic_reduce(u), cv = cyclic_reduce(v);
  if (cu.size() != cv.size()) return false;
  auto const inv = cv.inverse();
  for (std::size_t i = 0; i < std::max<std::size_t>(cv.size(), 1); ++i)
    if (cu == cv.rotated(i) || cu == inv.rotated(i)) return true;
  return false;
}

GroupWord sq_relator(GenSymbol const& x, GenSymbol const& y) {
  return GroupWord({{y, -1}, {x, 1}, {y, 1}, {x, -1}, {x, -1}});
}

GroupWord commutator(GenSymbol const& x, GenSymbol const& y) {
  return GroupWord({{x, -1}, {y, -1}, {x, 1}, {y, 1}});
}

std::string to_string(GroupWord const& w) {
  std::ostringstream out;
  auto const& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    int const k = static_cast<int>(j - i) * l[i].exp;
    if (i > 0) out << ' ';
    out << l[i].gen;
    if (k != 1) out << k;
    i = j;
  }
  return out.str();
}

GroupWord parse_word(std::string_view text, std::vector<GenSymbol> const& generators) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string const* best = nullptr;
    for (auto const& g : generators)
      if (tok.compare(0, g.size(), g) == 0 && (!best || g.size() > best->size())) best = &g;
    if (!best) fail(ErrorKind::Parse, "unknown generator in '" + tok + "'");
    std::string rest = tok.substr(best->size());
    if (!rest.empty() && rest[0] == '^') rest.erase(0, 1);
    int k = 1;
    if (!rest.empty()) {
      auto const digits = rest.substr(rest[0] == '-' || rest[0] == '+' ? 1 : 0);
      if (digits.empty() || digits.size() > 6 ||
          !std::all_of(digits.begin(), digits.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail(ErrorKind::Parse, "bad exponent in '" + tok + "'");
      k = std::stoi(rest);
    }
    auto const p = GroupWord::power(*best, k);
    out.insert(out.end(), p.letters().begin(), p.letters().end());
  }
  return GroupWord(std::move(out));
}

GroupWord rename(GroupWord const& w, std::vector<std::pair<GenSymbol, GenSymbol>> const& map) {
  std::vector<Letter> out;
  for (auto const& l : w.letters()) {
    auto it = std::find_if(map.begin(), map.end(), [&](auto const& p) { return p.first == l.gen; });
    out.push_back({it == map.end() ? l.gen : it->second, l.exp});
  }
  return GroupWord(std::move(out));
}

}  // namespace soplab::groups
