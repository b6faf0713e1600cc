#include "soplab/groups/free_amalgam.hpp"

#include <algorithm>
#include <set>

#include "soplab/error.hpp"

namespace soplab::groups {

namespace {

bool contains(std::vector<GenSymbol> const& v, GenSymbol const& g) {
  return std::find(v.begin(), v.end(), g) != v.end();
}

bool over(GroupWord const& w, std::vector<GenSymbol> const& allowed) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [&](Letter const& l) { return contains(allowed, l.gen); });
}

void append_unique(std::vector<GroupWord>& out, std::vector<GroupWord> const& add) {
  for (auto const& r : add)
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
}

void append_unique(std::vector<GenSymbol>& out, std::vector<GenSymbol> const& add) {
  for (auto const& g : add)
    if (!contains(out, g)) out.push_back(g);
}

std::vector<GroupWord> renamed(std::vector<GroupWord> const& rs, Renaming const& map) {
  std::vector<GroupWord> out;
  for (auto const& r : rs) out.push_back(rename(r, map));
  return out;
}

std::vector<GenSymbol> renamed(std::vector<GenSymbol> const& gs, Renaming const& map) {
  std::vector<GenSymbol> out;
  for (auto const& g : gs) out.push_back(rename(GroupWord({{g, 1}}), map)[0].gen);
  return out;
}

// Images of K₀'s generators in a factor; the map must be injective.
std::vector<std::pair<GenSymbol, GroupWord>> identify(Presentation const& k0,
                                                      Presentation const& factor) {
  std::vector<std::pair<GenSymbol, GroupWord>> out;
  std::set<GenSymbol> images;
  for (auto const& g : k0.generators) {
    if (!factor.has_generator(g))
      fail(ErrorKind::Construction, "K0 generator " + g + " missing from " + factor.name);
    if (!images.insert(g).second)
      fail(ErrorKind::Construction, "identification map into " + factor.name + " not injective");
    out.emplace_back(g, GroupWord({{g, 1}}));
  }
  return out;
}

}  // namespace

std::vector<GenSymbol> AdjacencyType::auxiliary() const {
  std::vector<GenSymbol> out;
  for (auto const& g : generators)
    if (!contains(first, g) && !contains(second, g) && !contains(constants, g)) out.push_back(g);
  return out;
}

void AdjacencyType::validate() const {
  if (first.empty() || first.size() != second.size())
    fail(ErrorKind::Construction, "designated tuples must be nonempty and of equal length");
  std::set<GenSymbol> seen;
  for (auto const* part : {&first, &second, &constants})
    for (auto const& g : *part) {
      if (!contains(generators, g)) fail(ErrorKind::Construction, "undeclared symbol " + g);
      if (!seen.insert(g).second)
        fail(ErrorKind::Construction, "symbol " + g + " is used twice in the tuples or H-");
    }
  try {
    Presentation{name, generators, relators}.validate();
  } catch (Error const& e) {
    fail(ErrorKind::Construction, e.what());
  }
}

AdjacencyType AdjacencyType::sq_pair() {
  return {"sq-pair", {"x", "y"}, {"x"}, {"y"}, {}, {sq_relator("x", "y")}};
}

AdjacencyType AdjacencyType::free_pair() { return {"free-pair", {"x", "y"}, {"x"}, {"y"}, {}, {}}; }

AdjacencyType AdjacencyType::central_pair() {
  return {"central-pair", {"x", "y", "z"}, {"x"},
          {"y"},          {"z"},           {commutator("x", "z"), commutator("y", "z")}};
}

AdjacencyType AdjacencyType::by_name(std::string_view name) {
  if (name == "sq-pair") return sq_pair();
  if (name == "free-pair") return free_pair();
  if (name == "central-pair") return central_pair();
  fail(ErrorKind::Usage, "unknown adjacency type '" + std::string(name) + "'");
}

std::string PairInstance::label() const {
  return "(a" + std::to_string(i) + ",a" + std::to_string(j) + ")";
}

GenSymbol tuple_symbol(int i, std::size_t slot, std::size_t length) {
  auto s = "a" + std::to_string(i);
  return length == 1 ? s : s + "_" + std::to_string(slot);
}

FreeAmalgam build_free_amalgam(AdjacencyType const& type, bool relabel) {
  type.validate();
  auto const len = type.first.size();
  auto tuple = [&](int i) {
    std::vector<GenSymbol> out;
    for (std::size_t l = 0; l < len; ++l) out.push_back(tuple_symbol(i, l, len));
    return out;
  };
  for (auto const& c : type.constants)
    for (int i = 0; i < 4; ++i)
      if (contains(tuple(i), c))
        fail(ErrorKind::Construction, "constant " + c + " clashes with a tuple generator");

  FreeAmalgam out;
  auto& d = out.data;
  // (i, j) in the orientation the pair group is presented in.
  std::vector<std::pair<int, int>> const order = {
      {0, 1}, {1, 2}, {2, 3}, relabel ? std::pair{3, 0} : std::pair{0, 3}};
  for (auto const& [i, j] : order) {
    PairInstance p{i, j, {}};
    auto const ti = tuple(i), tj = tuple(j);
    for (std::size_t l = 0; l < len; ++l) {
      p.substitution.emplace_back(type.first[l], ti[l]);
      p.substitution.emplace_back(type.second[l], tj[l]);
    }
    for (auto const& c : type.constants) p.substitution.emplace_back(c, c);
    for (auto const& g : type.auxiliary())
      p.substitution.emplace_back(g, g + "_" + std::to_string(i) + std::to_string(j));
    Presentation h{"H" + std::to_string(i) + "," + std::to_string(j),
                   renamed(type.generators, p.substitution),
                   renamed(type.relators, p.substitution)};
    h.validate();
    d.pair_groups.push_back(std::move(h));
    d.pairs.push_back(std::move(p));
  }

  // K₀ = H₀ *_{H⁻} H₂. The relators visible for H₀ and H₂ are the type's
  // relators over x̄ and the constants; H⁻ relators are shared.
  std::vector<GenSymbol> x_and_const = type.first;
  append_unique(x_and_const, type.constants);
  d.k0.name = "K0";
  for (int i : {0, 2}) {
    Renaming sub;
    auto const ti = tuple(i);
    for (std::size_t l = 0; l < len; ++l) sub.emplace_back(type.first[l], ti[l]);
    append_unique(d.k0.generators, ti);
    for (auto const& r : type.relators)
      if (over(r, x_and_const)) append_unique(d.k0.relators, {rename(r, sub)});
  }
  append_unique(d.k0.generators, type.constants);

  auto factor = [&](std::string name, std::size_t p, std::size_t q) {
    Presentation f{std::move(name), d.pair_groups[p].generators, d.pair_groups[p].relators};
    append_unique(f.generators, d.pair_groups[q].generators);
    append_unique(f.relators, d.pair_groups[q].relators);
    return f;
  };
  d.k1 = factor("K1", 0, 1);
  d.k2 = factor("K2", 2, 3);
  d.into_k1 = identify(d.k0, d.k1);
  d.into_k2 = identify(d.k0, d.k2);
  d.notes.push_back(
      "K1 is amalgamated over the subgroup generated by b1 and H-, the part "
      "H01 and H12 actually share");

  // Flatten: K₀'s generators are identified by name in both factors.
  out.k.name = "K";
  for (int i = 0; i < 4; ++i) append_unique(out.k.generators, tuple(i));
  append_unique(out.k.generators, type.constants);
  append_unique(out.k.generators, d.k1.generators);
  append_unique(out.k.generators, d.k2.generators);
  append_unique(out.k.relators, d.k1.relators);
  append_unique(out.k.relators, d.k2.relators);
  out.k.validate();
  return out;
}

nlohmann::json to_json(AmalgamPresentation const& a) {
  auto pres = [](Presentation const& p) {
    nlohmann::json rel = nlohmann::json::array();
    for (auto const& r : p.relators) rel.push_back(to_string(r));
    return nlohmann::json{{"name", p.name}, {"generators", p.generators}, {"relators", rel}};
  };
  nlohmann::json j;
  for (auto const& h : a.pair_groups) j["pair_groups"].push_back(pres(h));
  j["K0"] = pres(a.k0);
  j["K1"] = pres(a.k1);
  j["K2"] = pres(a.k2);
  return j;
}

}  // namespace soplab::groups
