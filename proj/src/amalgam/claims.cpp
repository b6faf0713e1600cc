#include "soplab/amalgam/claims.hpp"

#include <algorithm>
#include <random>

#include "soplab/error.hpp"

namespace soplab::amalgam {

using nlohmann::json;
using qlinalg::to_string;

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::map<std::string, std::string> base_params(SequenceProvider const& p, FSVector const& r1,
                                               FSVector const& r2) {
  return {{"provider", p.name()}, {"r1", to_string(r1)}, {"r2", to_string(r2)}};
}

CheckReport report(std::string claim, std::map<std::string, std::string> params) {
  CheckReport r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  return r;
}

Rational ratio_factor(std::uint32_t d) { return qlinalg::make_rational(d + 2, d); }  // 1 + 2/d

Rational lookup(std::vector<ProfileEntry> const& profile, std::uint32_t k, NormTag tag) {
  for (auto const& e : profile)
    if (e.k == k && e.tag == tag) return e.value;
  fail(ErrorKind::Range, "profile has no entry for k=" + str(k));
}

FSVector random_tuple(AmalgamSpace const& space, std::uint32_t i, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> c(space.n());
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return space.tuple_vector(i, c);
}

}  // namespace

FSVector base_vector(SequenceProvider const& provider, std::vector<Rational> const& coeffs) {
  if (coeffs.size() != provider.n()) fail(ErrorKind::Shape, "one coefficient per slot expected");
  FSVector v;
  for (std::uint32_t l = 0; l < provider.n(); ++l)
    v.add_to(AmalgamSpace::coord(provider.n(), provider.nstar(), 0, l), coeffs[l]);
  return v;
}

std::vector<ProfileEntry> sequence_norm_profile(SequenceProvider const& provider,
                                                FSVector const& r1, FSVector const& r2,
                                                std::uint32_t K) {
  if (K < 2) fail(ErrorKind::Range, "profile needs K >= 2");
  AmalgamSpace const space(provider, K);
  space.shift(r1, 0, 0);
  std::vector<ProfileEntry> out;
  for (std::uint32_t k = 1; k <= K; ++k) {
    auto const rk = r1 + space.shift(r2, 0, k);
    for (auto tag : kAllTags) out.push_back({k, tag, infconv_norm(space, rk, tag).value});
  }
  return out;
}

std::vector<CheckReport> verify_convergence_claims(SequenceProvider const& provider,
                                                   FSVector const& r1, FSVector const& r2,
                                                   std::uint32_t j, std::uint32_t samples,
                                                   std::uint64_t seed) {
  if (j < 2) fail(ErrorKind::Range, "convergence claims need j >= 2");
  auto const m = j * j;
  AmalgamSpace const space(provider, m);
  auto params = base_params(provider, r1, r2);
  params["j"] = str(j);

  CheckReport one = report("amalgam.clm_conv.1", params);
  CheckReport two = report("amalgam.clm_conv.2", params);
  CheckReport main = report("amalgam.main_claim", params);
  main.params["samples"] = str(samples);
  main.params["seed"] = str(seed);

  std::vector<ProfileEntry> profile;
  timed(one, [&] {
    profile = sequence_norm_profile(provider, r1, r2, m);
    Rational const bound =
        provider.ambient_norm(space.h1(r1)) + provider.ambient_norm(space.h1(r2));
    one.values["bound"] = to_string(bound);
    for (auto tag : kAllTags) {
      Rational prev = -1;
      json seq = json::array();
      for (std::uint32_t k = 1; k <= m; ++k) {
        auto const v = lookup(profile, k, tag);
        seq.push_back(to_string(v));
        if (v < prev)
          one.falsify("profile decreases", {{"tag", to_string(tag)},
                                            {"k", k},
                                            {"value", to_string(v)},
                                            {"previous", to_string(prev)}});
        if (v > bound)
          one.falsify("profile exceeds bound",
                      {{"tag", to_string(tag)}, {"k", k}, {"value", to_string(v)}});
        prev = v;
      }
      one.values["limit_tag" + to_string(tag)] = to_string(prev);
    }
  });

  timed(two, [&] {
    auto const zero_m = lookup(profile, m, NormTag::Zero);
    Rational const floor = lookup(profile, j, NormTag::Zero) / ratio_factor(j);
    two.values["r_m_tag0"] = to_string(zero_m);
    two.values["floor"] = to_string(floor);
    for (auto tag : {NormTag::Plus, NormTag::Minus}) {
      auto const v = lookup(profile, m, tag);
      two.values["r_m_tag" + to_string(tag)] = to_string(v);
      if (!(zero_m >= v && v >= floor))
        two.falsify("sandwich fails", {{"tag", to_string(tag)},
                                       {"value", to_string(v)},
                                       {"tag0", to_string(zero_m)},
                                       {"floor", to_string(floor)}});
    }
  });

  timed(main, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> lo(0, m - 2);
    Rational worst = -1;  // least ‖r‖_1 / ‖h₁(r)‖_B seen
    for (std::uint32_t s = 0; s < samples; ++s) {
      auto const k = lo(rng);
      auto const q = std::uniform_int_distribution<std::uint32_t>(k + 2, m)(rng);
      auto const ck = random_tuple(space, k, rng), cq = random_tuple(space, q, rng);
      auto const r = cq - ck;
      auto const lhs = infconv_norm(space, r, NormTag::Plus).value;
      auto const induced = provider.ambient_norm(space.h1(r));
      auto const swapped =
          provider.ambient_norm(space.h1(space.shift(cq, q, k) - space.shift(ck, k, q)));
      auto const bnorm = std::max(induced, swapped);
      if (bnorm > 0) worst = worst < 0 ? lhs / bnorm : std::min(worst, Rational(lhs / bnorm));
      if (lhs * ratio_factor(q - k) < bnorm)
        main.falsify("ratio bound fails", {{"k", k},
                                           {"q", q},
                                           {"r", qlinalg::to_json(r)},
                                           {"norm1", to_string(lhs)},
                                           {"b_norm", to_string(bnorm)}});
    }
    main.values["min_ratio"] = to_string(std::max(worst, Rational(0)));
  });
  return {one, two, main};
}

RhoEstimate rho_estimate(SequenceProvider const& provider, FSVector const& r1, FSVector const& r2,
                         std::uint32_t j_max) {
  if (j_max < 2) fail(ErrorKind::Range, "rho_estimate needs jMax >= 2");
  RhoEstimate est;
  est.stage = j_max * j_max;
  for (std::uint32_t j = 2; j <= j_max; ++j) {
    AmalgamSpace const space(provider, j * j);
    auto const rm = r1 + space.shift(r2, 0, j * j);
    auto const plus = infconv_norm(space, rm, NormTag::Plus).value;
    auto const minus = infconv_norm(space, rm, NormTag::Minus).value;
    est.lower_by_j.push_back(std::min(plus, minus));
    if (j == j_max) {
      est.forward = plus;
      est.reversed = minus;
      auto const swap = r2 + space.shift(r1, 0, j * j);
      est.swapped = infconv_norm(space, swap, NormTag::Plus).value;
    }
  }
  est.lower = *std::max_element(est.lower_by_j.begin(), est.lower_by_j.end());
  est.upper = est.lower * ratio_factor(j_max);
  return est;
}

CheckReport rho_check(SequenceProvider const& provider, FSVector const& r1, FSVector const& r2,
                      std::uint32_t j_max) {
  CheckReport r = report("amalgam.rho", base_params(provider, r1, r2));
  r.params["j_max"] = str(j_max);
  timed(r, [&] {
    auto const e = rho_estimate(provider, r1, r2, j_max);
    r.values = {{"lower", to_string(e.lower)},       {"upper", to_string(e.upper)},
                {"forward", to_string(e.forward)},   {"swapped", to_string(e.swapped)},
                {"reversed", to_string(e.reversed)}, {"width", to_string(e.upper - e.lower)}};
    json lows = json::array();
    for (auto const& q : e.lower_by_j) lows.push_back(to_string(q));
    if (!std::is_sorted(e.lower_by_j.begin(), e.lower_by_j.end()))
      r.falsify("lower bound decreases with the stage", {{"lower_by_j", lows}});
    auto inside = [&](Rational const& v) { return e.lower <= v && v <= e.upper; };
    if (!inside(e.forward) || !inside(e.swapped))
      r.falsify("forward or swapped norm leaves the interval",
                {{"forward", to_string(e.forward)}, {"swapped", to_string(e.swapped)}});
    if (e.upper - e.lower > qlinalg::make_rational(2, j_max) * e.lower)
      r.falsify("interval too wide", {{"width", to_string(e.upper - e.lower)}});
    if (e.swapped != e.reversed) r.notes.push_back("swapped tag-1 differs from tag -1");
  });
  return r;
}

CheckReport tag_zero_dominance(SequenceProvider const& provider, std::uint32_t m,
                               std::uint32_t samples, std::uint64_t seed) {
  CheckReport r = report("amalgam.tag0", {{"provider", provider.name()},
                                          {"m", str(m)},
                                          {"samples", str(samples)},
                                          {"seed", str(seed)}});
  AmalgamSpace const space(provider, m);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution use(0.6);
  std::uint64_t equal = 0;
  timed(r, [&] {
    for (std::uint32_t s = 0; s < samples; ++s) {
      FSVector t;
      for (std::uint32_t i = 0; i <= m; ++i)
        if (use(rng)) t += random_tuple(space, i, rng);
      auto const p = infconv_norm(space, t, NormTag::Plus).value;
      auto const q = infconv_norm(space, t, NormTag::Minus).value;
      auto const z = infconv_norm(space, t, NormTag::Zero).value;
      if (z < std::max(p, q))
        r.falsify("tag 0 below a signed tag", {{"t", qlinalg::to_json(t)},
                                               {"tag0", to_string(z)},
                                               {"tag1", to_string(p)},
                                               {"tag-1", to_string(q)}});
      if (z == std::max(p, q)) ++equal;
    }
  });
  r.values["equal_to_max"] = to_string(Rational(equal));
  return r;
}

}  // namespace soplab::amalgam
