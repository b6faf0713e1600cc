#include "soplab/cli/suites.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "soplab/amalgam/claims.hpp"
#include "soplab/banach/checks.hpp"
#include "soplab/error.hpp"
#include "soplab/groups/checks.hpp"

namespace soplab::cli {

using qlinalg::Rational;

namespace {

std::vector<CheckReport> verify_banach(SuiteConfig const& c) {
  std::vector<CheckReport> out;
  out.push_back(banach::kernel_witness_check());
  out.push_back(banach::check_eq1_eq2(c.n, c.range));
  out.push_back(banach::chain_verify(c.n, c.chain));
  out.push_back(banach::distinctness_check(c.range));
  out.push_back(banach::term_shift_identity(c.n_max));
  for (std::uint32_t m = 3; m <= c.n; ++m)
    out.push_back(banach::cycle_search_and_certify(c.n, m, c.trials, c.seed + m));
  out.push_back(banach::entailment_spotcheck(c.n, c.samples, c.seed));
  return out;
}

std::vector<CheckReport> verify_sop_type(SuiteConfig const& c) {
  CheckReport r;
  r.claim = "banach.type_p";
  r.params = {{"N", std::to_string(c.type_n)}, {"chain", std::to_string(c.chain)}};
  std::size_t pairs = 0, reversed_fail = 0;
  for (std::uint32_t a = 0; a < c.chain; ++a)
    for (std::uint32_t b = a + 1; b < c.chain; ++b) {
      auto const x = banach::chain_pair(a), y = banach::chain_pair(b);
      auto const e = banach::type_p_eval(c.type_n, x, y);
      ++pairs;
      if (!e.passed() && r.status != Status::Fail) r.falsify(e.notes.front(), e.witness);
      if (!banach::type_p_holds(c.type_n, y, x)) ++reversed_fail;
    }
  r.values["pairs"] = std::to_string(pairs) + "/1";
  r.values["reversed_fail"] = std::to_string(reversed_fail) + "/1";
  return {r};
}

std::vector<CheckReport> verify_amalgam(SuiteConfig const& c) {
  auto const provider = amalgam::provider_by_name(c.provider);
  std::vector<Rational> u1(provider.n(), Rational(0)), u2 = u1;
  u1.front() = 1;
  u2.back() = 1;
  auto const r1 = amalgam::base_vector(provider, u1), r2 = amalgam::base_vector(provider, u2);
  auto out = amalgam::verify_convergence_claims(provider, r1, r2, c.j, 8, c.seed);
  out.push_back(amalgam::rho_check(provider, r1, r2, c.j_max));
  out.push_back(amalgam::tag_zero_dominance(provider, c.j, 8, c.seed));
  out.push_back(amalgam::indiscernibility_test(
      provider, c.window, static_cast<std::uint32_t>(std::min<std::uint64_t>(c.samples, 1000)),
      c.seed));
  for (auto& r : out) r.params["provider"] = c.provider;
  return out;
}

groups::Presentation load_presentation(SuiteConfig const& c) {
  if (c.presentation.empty()) return groups::preset(c.preset);
  std::ifstream in(c.presentation);
  if (!in) fail(ErrorKind::Io, "cannot read presentation file " + c.presentation);
  std::stringstream buf;
  buf << in.rdbuf();
  return groups::parse_presentation(buf.str(), c.presentation);
}

std::vector<CheckReport> groups_enumerate(SuiteConfig const& c) {
  auto const pres = load_presentation(c);
  std::vector<CheckReport> out{groups::enumerate_check(pres, c.max_cosets)};
  if (c.presentation.empty() && c.preset == "triangle")
    out.push_back(groups::triangle_refutation_check(c.max_cosets, pres));
  return out;
}

std::vector<CheckReport> groups_britton(SuiteConfig const& c) {
  return {groups::britton_check(groups::parse_word(c.word, {"a", "b", "c"}))};
}

std::vector<CheckReport> groups_amalgamate(SuiteConfig const& c) {
  auto const type = groups::AdjacencyType::by_name(c.adjacency);
  auto const am = groups::build_free_amalgam(type, c.relabel);
  std::vector<CheckReport> out{
      groups::flattening_check(am, type),
      groups::adjacency_type_check(am.k, am.data.pairs, type.relators, c.max_cosets)};
  for (auto& r : out) r.params["relabel"] = c.relabel ? "true" : "false";
  out.front().witness["amalgam"] = groups::to_json(am.data);
  return out;
}

std::vector<CheckReport> groups_chain(SuiteConfig const& c) {
  std::vector<CheckReport> out{groups::bs12_chain_check()};
  for (int k = 2; k <= static_cast<int>(c.k); ++k)
    out.push_back(groups::chain_probe(k, c.max_cosets));
  return out;
}

}  // namespace

std::vector<CheckReport> run_suite(SuiteConfig const& cfg) {
  cfg.validate();
  std::vector<CheckReport> out;
  auto const& s = cfg.suite;
  if (s == "verify banach")
    out = verify_banach(cfg);
  else if (s == "verify amalgam")
    out = verify_amalgam(cfg);
  else if (s == "verify sop-type")
    out = verify_sop_type(cfg);
  else if (s == "groups enumerate")
    out = groups_enumerate(cfg);
  else if (s == "groups britton")
    out = groups_britton(cfg);
  else if (s == "groups amalgamate")
    out = groups_amalgamate(cfg);
  else if (s == "groups chain-check")
    out = groups_chain(cfg);
  else
    fail(ErrorKind::Usage, s.empty() ? "no suite given" : "unknown suite '" + s + "'");
  std::stable_sort(out.begin(), out.end(), report_order);
  return out;
}

}  // namespace soplab::cli
