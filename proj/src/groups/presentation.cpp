#include "soplab/groups/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "soplab/error.hpp"

namespace soplab::groups {

bool Presentation::has_generator(GenSymbol const& g) const {
  return std::find(generators.begin(), generators.end(), g) != generators.end();
}

void Presentation::validate() const {
  std::set<GenSymbol> seen;
  for (auto const& g : generators) {
    if (g.empty()) fail(ErrorKind::Structural, "empty generator name");
    if (!seen.insert(g).second) fail(ErrorKind::Structural, "duplicate generator " + g);
  }
  for (auto const& r : relators) {
    if (!r.is_reduced()) fail(ErrorKind::Structural, "relator not freely reduced: " + to_string(r));
    for (auto const& l : r.letters())
      if (!seen.contains(l.gen))
        fail(ErrorKind::Structural, "relator uses undeclared generator " + l.gen);
  }
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < generators.size(); ++i) out << (i ? " " : "") << generators[i];
  out << '\n';
  for (auto const& r : relators) out << to_string(r) << '\n';
  return out.str();
}

Presentation parse_presentation(std::string_view text, std::string name) {
  Presentation p;
  p.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_gens = false;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_gens) {
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream gs(line);
      std::string g;
      while (gs >> g) {
        if (!std::isalpha(static_cast<unsigned char>(g[0])))
          fail(ErrorKind::Parse, "generator names must start with a letter: " + g);
        p.generators.push_back(g);
      }
      have_gens = true;
      continue;
    }
    auto r = free_reduce(parse_word(line, p.generators));
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  if (!have_gens) fail(ErrorKind::Parse, "presentation has no generator line");
  try {
    p.validate();
  } catch (Error const& e) {
    fail(ErrorKind::Parse, e.what());
  }
  return p;
}

namespace {

int parse_suffix(std::string_view name, std::string_view prefix, int min) {
  auto const digits = name.substr(prefix.size());
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || k < min || k > 64)
    fail(ErrorKind::Usage, "bad preset parameter in '" + std::string(name) + "'");
  return k;
}

Presentation cycle_preset(std::string name, std::vector<GenSymbol> gens) {
  Presentation p{std::move(name), gens, {}};
  for (std::size_t i = 0; i < gens.size(); ++i)
    p.relators.push_back(sq_relator(gens[i], gens[(i + 1) % gens.size()]));
  return p;
}

}  // namespace

Presentation preset(std::string_view name) {
  if (name == "triangle") return cycle_preset("triangle", {"a", "b", "c"});
  if (name == "two-cycle") return cycle_preset("two-cycle", {"a", "b"});
  if (name == "higman") return cycle_preset("higman", {"a", "b", "c", "d"});
  if (name.starts_with("chain-")) {
    int const k = parse_suffix(name, "chain-", 2);
    Presentation p{std::string(name), {}, {}};
    for (int i = 0; i < k; ++i) p.generators.push_back("x" + std::to_string(i));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        p.relators.push_back(sq_relator(p.generators[i], p.generators[j]));
    return p;
  }
  if (name.starts_with("cyclic-")) {
    int const k = parse_suffix(name, "cyclic-", 1);
    return {std::string(name), {"a"}, {GroupWord::power("a", k)}};
  }
  fail(ErrorKind::Usage, "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"triangle", "two-cycle", "higman", "chain-k", "cyclic-N"};
}

bool same_relator_set(std::vector<GroupWord> a, std::vector<GroupWord> b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

}  // namespace soplab::groups
