#include "soplab/groups/checks.hpp"

#include <optional>

#include "soplab/error.hpp"
#include "soplab/groups/affine.hpp"

namespace soplab::groups {

namespace {

std::string count(std::size_t n) { return std::to_string(n) + "/1"; }

nlohmann::json words(std::vector<GroupWord> const& ws) {
  nlohmann::json j = nlohmann::json::array();
  for (auto const& w : ws) j.push_back(to_string(w));
  return j;
}

CheckReport table_report(std::string claim, Presentation const& pres, std::size_t max_cosets,
                         CosetTable const& t) {
  CheckReport r;
  r.claim = std::move(claim);
  r.params["preset"] = pres.name;
  r.params["max_cosets"] = std::to_string(max_cosets);
  r.witness["table"] = t.status_text();
  if (t.closed()) r.values["index"] = count(t.index);
  r.values["total_defined"] = count(t.total_defined);
  r.values["max_live"] = count(t.max_live);
  if (!t.closed()) {
    r.inconclusive("enumeration overflowed at " + std::to_string(max_cosets) + " cosets");
    return r;
  }
  if (auto const defect = verify_coset_table(t, pres, {}); !defect.empty())
    r.falsify("coset table unsound: " + defect, {{"presentation", pres.to_text()}});
  return r;
}

}  // namespace

CheckReport enumerate_check(Presentation const& pres, std::size_t max_cosets) {
  auto const t = todd_coxeter(pres, {}, max_cosets);
  return table_report("groups.enumerate", pres, max_cosets, t);
}

CheckReport triangle_refutation_check(std::size_t max_cosets, Presentation const& pres) {
  auto const t = todd_coxeter(pres, {}, max_cosets);
  auto r = table_report("groups.triangle", pres, max_cosets, t);
  r.notes.push_back("relation read as x^y = x^2 with x^y = y^-1 x y");
  if (t.closed() && t.index != 1)
    r.falsify("group does not collapse", {{"index", t.index}, {"presentation", pres.to_text()}});
  return r;
}

CheckReport chain_probe(int k, std::size_t max_cosets) {
  if (k < 2) fail(ErrorKind::Range, "chain length must be at least 2");
  auto const pres = preset("chain-" + std::to_string(k));
  auto const t = todd_coxeter(pres, {}, max_cosets);
  CheckReport r = table_report("groups.chain_probe", pres, max_cosets, t);
  r.params["k"] = std::to_string(k);
  if (t.closed() && t.index == 1)
    r.falsify("chain presentation collapses", {{"presentation", pres.to_text()}});
  if (k == 2 && r.status != Status::Fail) {
    auto const model = bs12_chain_check();
    r.status = model.status;
    r.notes.push_back("certified by the affine model x0: t -> t+1, x1: t -> t/2");
  } else if (r.status == Status::Inconclusive) {
    r.notes.push_back("unresolved: no concrete model for chains of this length");
  }
  return r;
}

CheckReport flattening_check(FreeAmalgam const& amalgam, AdjacencyType const& type) {
  CheckReport r;
  r.claim = "groups.amalgam";
  r.params["type"] = type.name;
  auto const& d = amalgam.data;
  std::vector<GroupWord> expected;
  for (auto const& h : d.pair_groups)
    expected.insert(expected.end(), h.relators.begin(), h.relators.end());
  std::vector<GroupWord> factors = d.k1.relators;
  factors.insert(factors.end(), d.k2.relators.begin(), d.k2.relators.end());
  r.values["relators"] = count(amalgam.k.relators.size());
  r.values["generators"] = count(amalgam.k.generators.size());
  r.witness["K"] = words(amalgam.k.relators);
  if (!same_relator_set(amalgam.k.relators, expected) ||
      !same_relator_set(amalgam.k.relators, factors))
    r.falsify("flattened relators differ from the union of the factors",
              {{"union", words(expected)}});
  for (auto const& [g, img] : d.into_k1)
    if (!amalgam.k.has_generator(g)) r.falsify("K0 generator lost in K", {{"generator", g}});
  if (type.name == "sq-pair") {
    auto const higman = preset("higman");
    Renaming const names = {{"a", "a0"}, {"b", "a1"}, {"c", "a2"}, {"d", "a3"}};
    std::vector<GroupWord> target;
    for (auto const& w : higman.relators) target.push_back(rename(w, names));
    bool const same_gens = amalgam.k.generators == std::vector<GenSymbol>{"a0", "a1", "a2", "a3"};
    r.values["matches_higman"] =
        same_gens && same_relator_set(amalgam.k.relators, target) ? "1/1" : "0/1";
    if (r.values["matches_higman"] != "1/1")
      r.falsify("flattened K is not the Higman presentation", {{"higman", words(target)}});
  }
  return r;
}

CheckReport adjacency_type_check(Presentation const& k, std::vector<PairInstance> const& pairs,
                                 std::vector<GroupWord> const& relators, std::size_t max_cosets) {
  CheckReport r;
  r.claim = "groups.adjacency";
  r.params["K"] = k.name;
  r.params["max_cosets"] = std::to_string(max_cosets);
  std::optional<CosetTable> table;
  std::size_t syntactic = 0, traced = 0, open = 0;
  nlohmann::json detail = nlohmann::json::array();
  for (auto const& p : pairs) {
    for (auto const& rel : relators) {
      auto const w = free_reduce(rename(rel, p.substitution));
      std::string how;
      for (auto const& kr : k.relators)
        if (cyclically_equivalent(w, kr)) how = "relator of K";
      if (how.empty() && cyclic_reduce(w).empty()) how = "freely trivial";
      if (how.empty()) {
        if (!table) table = todd_coxeter(k, {}, max_cosets);
        if (table->closed()) {
          how = table->trace(0, w) == 0 ? "traced" : "fails";
        } else {
          how = "unresolved";
        }
      }
      detail.push_back({{"pair", p.label()}, {"relator", to_string(w)}, {"by", how}});
      if (how == "traced")
        ++traced;
      else if (how == "unresolved")
        ++open;
      else if (how == "fails")
        r.falsify("relator does not hold in K", {{"pair", p.label()}, {"relator", to_string(w)}});
      else
        ++syntactic;
    }
  }
  r.values["pairs"] = count(pairs.size());
  r.values["by_relator"] = count(syntactic);
  r.values["by_trace"] = count(traced);
  r.values["unresolved"] = count(open);
  r.witness["checks"] = detail;
  if (open > 0) r.inconclusive("coset enumeration of K overflowed; some relators unresolved");
  if (relators.empty()) r.notes.push_back("no relators: vacuous");
  return r;
}

}  // namespace soplab::groups
