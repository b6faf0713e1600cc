#include "soplab/banach/checks.hpp"

#include <algorithm>

#include "soplab/error.hpp"
#include "soplab/qlinalg/seminorm.hpp"

namespace soplab::banach {

using nlohmann::json;
using qlinalg::seminorm_b0;
using qlinalg::to_string;

json to_json(TuplePair const& t) {
  return json::array({qlinalg::to_json(t.first), qlinalg::to_json(t.second)});
}

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

json edge_json(GraphEdgeReport const& e) {
  json values = json::array();
  for (auto const& v : e.values)
    values.push_back({{"family", to_string(v.conjunct.family)},
                      {"index", v.conjunct.index},
                      {"lhs", to_string(v.lhs)},
                      {"bound", to_string(v.conjunct.bound)},
                      {"holds", v.holds}});
  return {{"from", e.from}, {"to", e.to}, {"n", e.n}, {"conjuncts", values}};
}

}  // namespace

CheckReport check_eq1_eq2(std::uint32_t n, std::uint32_t range) {
  if (n < 3 || range < 2) fail(ErrorKind::Range, "check_eq1_eq2 needs n >= 3, range >= 2");
  CheckReport r;
  r.claim = "banach.eq1_eq2";
  r.params = {{"n", str(n)}, {"range", str(range)}};
  std::uint64_t eq1 = 0, eq2 = 0;
  json violations = json::array();
  auto record = [&](char const* which, std::uint32_t a, std::uint32_t b, std::uint32_t alpha,
                    std::uint32_t beta, FSVector const& d, Rational const& expected) {
    auto const sm = qlinalg::seminorm_b0_argmax(d);
    if (sm.value == expected) return;
    violations.push_back({{"identity", which},
                          {"index", a},
                          {"term", b},
                          {"alpha", alpha},
                          {"beta", beta},
                          {"value", to_string(sm.value)},
                          {"expected", to_string(expected)},
                          {"gamma", sm.gamma}});
  };
  timed(r, [&] {
    for (std::uint32_t beta = 1; beta < range; ++beta)
      for (std::uint32_t alpha = 0; alpha < beta; ++alpha) {
        for (std::uint32_t l = 0; l < n; ++l, ++eq1) {
          auto const d = witness_c(n, l + 1, beta).vector - witness_c(n, l, alpha).vector;
          record("eq1", l, l + 1, alpha, beta, d, Rational(2));
        }
        for (std::uint32_t m = 0; m <= n; ++m, ++eq2) {
          auto const d = witness_c(n, m, alpha).vector - witness_c(n, 0, beta).vector;
          auto const v = seminorm_b0(d);
          record("eq2", m, 0, alpha, beta, d, Rational(2 * m + 1));
          // Implied by eq2, checked on its own because φ_n states it separately.
          if (v > 2 * m + 2)
            violations.push_back({{"identity", "cap"},
                                  {"index", m},
                                  {"alpha", alpha},
                                  {"beta", beta},
                                  {"value", to_string(v)}});
        }
      }
  });
  r.values["eq1_checked"] = to_string(Rational(eq1));
  r.values["eq2_checked"] = to_string(Rational(eq2));
  if (!violations.empty())
    r.falsify(str(violations.size()) + " identity violations", {{"violations", violations}});
  return r;
}

CheckReport chain_verify(std::uint32_t n, std::vector<TuplePair> const& nodes) {
  if (n < 3 || nodes.size() < 2) fail(ErrorKind::Range, "chain_verify needs n >= 3, length >= 2");
  CheckReport r;
  r.claim = "banach.chain";
  r.params = {{"n", str(n)}, {"length", str(nodes.size())}};
  std::uint64_t pairs = 0;
  timed(r, [&] {
    for (std::size_t b = 1; b < nodes.size(); ++b)
      for (std::size_t a = 0; a < b; ++a, ++pairs) {
        if (phi_holds(n, nodes[a], nodes[b])) continue;
        auto const e = phi_eval(n, nodes[a], nodes[b], B0Seminorm{}, str(a), str(b));
        if (r.status != Status::Fail)
          r.falsify("phi_n fails on pair (" + str(a) + ", " + str(b) + ")",
                    {{"edge", edge_json(e)}, {"x", to_json(nodes[a])}, {"y", to_json(nodes[b])}});
      }
  });
  r.values["pairs"] = to_string(Rational(pairs));
  return r;
}

CheckReport chain_verify(std::uint32_t n, std::uint32_t length) {
  std::vector<TuplePair> nodes;
  for (std::uint32_t a = 0; a < length; ++a) nodes.push_back(chain_pair(a));
  return chain_verify(n, nodes);
}

Rational TupleSampler::small_rational() {
  std::uniform_int_distribution<long> num(-height_, height_), den(1, height_);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

FSVector TupleSampler::grid_vector() {
  std::uniform_int_distribution<std::uint32_t> idx(0, max_index_), terms(0, 3);
  std::bernoulli_distribution kind(0.5);
  FSVector v;
  for (auto k = terms(rng_); k > 0; --k)
    v.add_to({kind(rng_) ? qlinalg::Kind::B : qlinalg::Kind::A, idx(rng_)}, small_rational());
  return v;
}

TuplePair TupleSampler::grid() { return {grid_vector(), grid_vector()}; }

TuplePair TupleSampler::perturbed_chain(std::uint32_t alpha) {
  auto node = chain_pair(alpha);
  std::bernoulli_distribution noisy(0.5);
  Rational const eps(1, height_ * height_);
  if (noisy(rng_)) node.first += eps * grid_vector();
  if (noisy(rng_)) node.second += eps * grid_vector();
  // Scales in (0, 1] keep the step conjuncts (exactly 2 on the chain) alive.
  std::uniform_int_distribution<long> k(1, height_);
  Rational scale = noisy(rng_) ? Rational(1) : Rational(k(rng_), height_);
  scale.canonicalize();
  node.first *= scale;
  node.second *= scale;
  return node;
}

TuplePair TupleSampler::next() {
  std::bernoulli_distribution coin(0.5);
  if (coin(rng_)) return grid();
  std::uniform_int_distribution<std::uint32_t> idx(0, max_index_);
  return perturbed_chain(idx(rng_));
}

std::vector<TuplePair> TupleSampler::cycle_attempt(std::uint32_t m) {
  std::uniform_int_distribution<int> mode(0, 2);
  std::vector<TuplePair> nodes;
  switch (mode(rng_)) {
    case 0:
      for (std::uint32_t i = 0; i <= m; ++i) nodes.push_back(grid());
      break;
    case 1: {
      // Increasing chain indices: the path conjuncts usually survive.
      std::uniform_int_distribution<std::uint32_t> gap(1, 2);
      std::uint32_t alpha = 0;
      for (std::uint32_t i = 0; i <= m; ++i, alpha += gap(rng_))
        nodes.push_back(perturbed_chain(alpha));
      break;
    }
    default:
      for (std::uint32_t i = 0; i <= m; ++i) nodes.push_back(next());
  }
  return nodes;
}

CycleCertificate certify_cycle(std::uint32_t n, std::vector<TuplePair> const& nodes) {
  if (nodes.size() < 4 || nodes.size() > n + 1)
    fail(ErrorKind::Range, "certify_cycle needs 2 < m <= n");
  auto const m = static_cast<std::uint32_t>(nodes.size() - 1);
  CycleCertificate c;
  c.bound = 2 * m;
  c.required = 2 * m + 1;
  c.path_holds = true;
  for (std::uint32_t i = 0; i < m; ++i) {
    auto const step =
        norm_in(B0Seminorm{}, Term(n, i + 1)(nodes[i + 1].first, nodes[i + 1].second) -
                                  Term(n, i)(nodes[i].first, nodes[i].second));
    c.telescoped += step;
    if (step > 2) c.path_holds = false;
  }
  c.closing = norm_in(B0Seminorm{}, Term(n, m)(nodes[m].first, nodes[m].second) -
                                        Term(n, 0)(nodes[0].first, nodes[0].second));
  bool all = phi_holds(n, nodes[m], nodes[0]);
  for (std::uint32_t i = 0; all && i < m; ++i) all = phi_holds(n, nodes[i], nodes[i + 1]);
  c.closed = all;
  return c;
}

CheckReport cycle_search_and_certify(std::uint32_t n, std::uint32_t m, std::uint64_t trials,
                                     std::uint64_t seed) {
  if (m <= 2 || m > n) fail(ErrorKind::Range, "cycle search needs 2 < m <= n");
  CheckReport r;
  r.claim = "banach.cycle";
  r.params = {{"n", str(n)}, {"m", str(m)}, {"trials", str(trials)}, {"seed", str(seed)}};
  TupleSampler sampler(seed);
  std::uint64_t certified = 0, closed = 0;
  Rational worst_closing = 0;
  timed(r, [&] {
    for (std::uint64_t t = 0; t < trials; ++t) {
      auto const nodes = sampler.cycle_attempt(m);
      auto const c = certify_cycle(n, nodes);
      json nodes_json = json::array();
      if (c.closed || (c.path_holds && !(c.closing <= c.telescoped && c.telescoped <= c.bound))) {
        for (auto const& x : nodes) nodes_json.push_back(to_json(x));
      }
      if (c.closed) {
        ++closed;
        if (closed == 1) r.falsify("closed phi_n cycle", {{"trial", t}, {"nodes", nodes_json}});
        continue;
      }
      if (!c.path_holds) continue;
      // Triangle inequality: closing ≤ telescoped ≤ 2m < 2m+1.
      if (c.closing <= c.telescoped && c.telescoped <= c.bound && c.bound < c.required) {
        ++certified;
        worst_closing = std::max(worst_closing, c.closing);
      } else if (r.status != Status::Fail) {
        r.falsify("telescoping certificate failed", {{"trial", t},
                                                     {"nodes", nodes_json},
                                                     {"closing", to_string(c.closing)},
                                                     {"telescoped", to_string(c.telescoped)}});
      }
    }
  });
  r.values["closed"] = to_string(Rational(closed));
  r.values["certified"] = to_string(Rational(certified));
  r.values["bound"] = to_string(Rational(2 * m));
  r.values["required"] = to_string(Rational(2 * m + 1));
  r.values["max_closing_on_certified"] = to_string(worst_closing);
  return r;
}

CheckReport term_shift_identity(std::uint32_t n_max) {
  if (n_max < 3) fail(ErrorKind::Range, "term_shift_identity needs n_max >= 3");
  CheckReport r;
  r.claim = "banach.term_shift";
  r.params = {{"n_max", str(n_max)}};
  std::uint64_t checked = 0;
  for (std::uint32_t n = 3; n <= n_max; ++n)
    for (std::uint32_t l = 0; l <= n; ++l, ++checked) {
      Term const a(n, l), b(n + 2, l + 1);
      if (a == b) continue;
      r.falsify("term shift differs", {{"n", n}, {"ell", l}});
    }
  r.values["checked"] = to_string(Rational(checked));
  return r;
}

CheckReport entailment_spotcheck(std::uint32_t n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 3) fail(ErrorKind::Range, "entailment_spotcheck needs n >= 3");
  CheckReport r;
  r.claim = "banach.entailment";
  r.params = {{"n", str(n)}, {"samples", str(samples)}, {"seed", str(seed)}};
  TupleSampler sampler(seed);
  std::uint64_t premise = 0, counter = 0;
  timed(r, [&] {
    for (std::uint64_t s = 0; s < samples; ++s) {
      TuplePair x = sampler.next(), y = sampler.next();
      if (!phi_holds(n + 2, x, y)) continue;
      ++premise;
      if (phi_holds(n, x, y)) continue;
      if (++counter == 1)
        r.falsify("phi_{n+2} holds but phi_n fails", {{"sample", s},
                                                      {"x", to_json(x)},
                                                      {"y", to_json(y)},
                                                      {"edge", edge_json(phi_eval(n, x, y))}});
    }
  });
  r.values["premise_true"] = to_string(Rational(premise));
  r.values["counterexamples"] = to_string(Rational(counter));
  return r;
}

bool type_p_holds(std::uint32_t N, TuplePair const& x, TuplePair const& y) {
  if (N < 1) fail(ErrorKind::Range, "type_p needs N >= 1");
  for (std::uint32_t k = 0; k < N; ++k)
    if (!phi_holds(2 * k + 3, x, y)) return false;
  return true;
}

CheckReport type_p_eval(std::uint32_t N, TuplePair const& x, TuplePair const& y) {
  if (N < 1) fail(ErrorKind::Range, "type_p needs N >= 1");
  CheckReport r;
  r.claim = "banach.type_p";
  r.params = {{"N", str(N)}};
  for (std::uint32_t k = 0; k < N; ++k) {
    auto const e = phi_eval(2 * k + 3, x, y);
    if (e.verdict) continue;
    r.falsify("phi_" + str(2 * k + 3) + " fails",
              {{"edge", edge_json(e)}, {"x", to_json(x)}, {"y", to_json(y)}});
    break;
  }
  return r;
}

CheckReport distinctness_check(std::uint32_t range) {
  CheckReport r;
  r.claim = "banach.distinct";
  r.params = {{"range", str(range)}};
  std::vector<FSVector> elems;
  for (std::uint32_t a = 0; a < range; ++a) {
    elems.push_back(FSVector::unit(qlinalg::a_(a)));
    elems.push_back(FSVector::unit(qlinalg::b_(a)));
  }
  Rational least = -1;
  auto note = [&](FSVector const& d, json w) {
    auto const v = seminorm_b0(d);
    if (least < 0 || v < least) least = v;
    if (v == 0 && r.status != Status::Fail) r.falsify("zero in the quotient", std::move(w));
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    note(elems[i], {{"element", qlinalg::to_json(elems[i])}});
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      note(elems[i] - elems[j],
           {{"left", qlinalg::to_json(elems[i])}, {"right", qlinalg::to_json(elems[j])}});
  }
  r.values["min_norm"] = to_string(std::max(least, Rational(0)));
  return r;
}

CheckReport kernel_witness_check() {
  CheckReport r;
  r.claim = "banach.kernel";
  auto const v = FSVector::unit(qlinalg::a_(0)) - FSVector::unit(qlinalg::a_(1)) -
                 FSVector::unit(qlinalg::b_(1)) + FSVector::unit(qlinalg::b_(0));
  auto const norm = seminorm_b0(v);
  r.values["seminorm"] = to_string(norm);
  if (norm != 0) r.falsify("vector is not in the kernel", {{"vector", qlinalg::to_json(v)}});
  return r;
}

}  // namespace soplab::banach
