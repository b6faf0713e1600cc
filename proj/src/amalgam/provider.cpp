#include "soplab/amalgam/provider.hpp"

#include <algorithm>
#include <random>

#include "soplab/error.hpp"
#include "soplab/qlinalg/seminorm.hpp"

namespace soplab::amalgam {

using qlinalg::Kind;

bool CoordRule::constant() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](CoordTerm const& t) { return t.index.scale == 0; });
}

SequenceProvider::SequenceProvider(std::string name, Ambient ambient, std::uint32_t nstar,
                                   std::vector<CoordRule> rules)
    : name_(std::move(name)), ambient_(ambient), nstar_(nstar), rules_(std::move(rules)) {
  if (rules_.empty()) fail(ErrorKind::ProviderInvariant, "provider has no coordinates");
  if (nstar_ >= rules_.size())
    fail(ErrorKind::ProviderInvariant, "nstar must be below the tuple length");
  for (std::uint32_t l = 0; l < rules_.size(); ++l) {
    auto const& r = rules_[l];
    if (r.terms.empty()) fail(ErrorKind::ProviderInvariant, "empty coordinate rule");
    if (l < nstar_ && !r.constant())
      fail(ErrorKind::ProviderInvariant, "coordinate " + std::to_string(l) + " must be constant");
    if (l >= nstar_ && r.constant())
      fail(ErrorKind::ProviderInvariant,
           "coordinate " + std::to_string(l) + " does not depend on i");
    for (auto const& t : r.terms)
      if (ambient_ == Ambient::B0 && t.kind == Kind::E)
        fail(ErrorKind::ProviderInvariant, "B0 ambient takes A/B symbols only");
  }
}

SequenceProvider SequenceProvider::canonical() {
  return SequenceProvider(
      "canonical", Ambient::B0, 0,
      {CoordRule{{{Rational(1), Kind::A, {1, 0}}}}, CoordRule{{{Rational(1), Kind::B, {1, 0}}}}});
}

SequenceProvider SequenceProvider::simple() {
  return SequenceProvider("simple", Ambient::MaxAbs, 0,
                          {CoordRule{{{Rational(1), Kind::E, {1, 0}}}}});
}

FSVector SequenceProvider::coordinate(std::uint32_t i, std::uint32_t ell) const {
  FSVector v;
  for (auto const& t : rules_.at(ell).terms) v.add_to({t.kind, t.index.at(i)}, t.coeff);
  return v;
}

std::vector<FSVector> SequenceProvider::tuple_at(std::uint32_t i) const {
  std::vector<FSVector> out;
  for (std::uint32_t l = 0; l < n(); ++l) out.push_back(coordinate(i, l));
  return out;
}

Rational SequenceProvider::ambient_norm(FSVector const& v) const {
  if (ambient_ == Ambient::B0) return qlinalg::seminorm_b0(v);
  Rational best = 0;
  for (auto const& [bi, c] : v) best = std::max(best, qlinalg::abs(c));
  return best;
}

PolyhedralNorm SequenceProvider::ambient_on(std::vector<BasisIndex> coords) const {
  return ambient_ == Ambient::B0 ? PolyhedralNorm::b0_restricted(std::move(coords))
                                 : PolyhedralNorm::max_abs(std::move(coords));
}

void SequenceProvider::check_basis(std::uint32_t m) const {
  std::vector<FSVector> family;
  for (std::uint32_t l = 0; l < nstar_; ++l) {
    family.push_back(coordinate(0, l));
    for (std::uint32_t i = 1; i <= m; ++i)
      if (coordinate(i, l) != family.back())
        fail(ErrorKind::ProviderInvariant, "constant coordinate varies with i");
  }
  for (std::uint32_t i = 0; i <= m; ++i)
    for (std::uint32_t l = nstar_; l < n(); ++l) family.push_back(coordinate(i, l));
  if (qlinalg::rank(family) != family.size())
    fail(ErrorKind::ProviderInvariant,
         "tuple coordinates are linearly dependent on 0.." + std::to_string(m));
}

CheckReport indiscernibility_test(SequenceProvider const& provider, std::uint32_t window,
                                  std::uint32_t samples, std::uint64_t seed) {
  if (window < 2) fail(ErrorKind::Range, "indiscernibility window must be >= 2");
  CheckReport r;
  r.claim = "amalgam.indiscernible";
  r.params = {{"provider", provider.name()},
              {"window", std::to_string(window)},
              {"samples", std::to_string(samples)},
              {"seed", std::to_string(seed)}};
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> pool(window);
  for (std::uint32_t i = 0; i < window; ++i) pool[i] = i;
  std::uniform_int_distribution<long> num(-6, 6), den(1, 6);
  std::uniform_int_distribution<std::uint32_t> len(1, std::min<std::uint32_t>(3, window));
  auto pick = [&](std::uint32_t k) {
    std::vector<std::uint32_t> out;
    std::sample(pool.begin(), pool.end(), std::back_inserter(out), k, rng);
    return out;  // std::sample keeps the pool order, so this is increasing
  };
  timed(r, [&] {
    for (std::uint32_t s = 0; s < samples && r.status != Status::Fail; ++s) {
      auto const k = len(rng);
      auto const left = pick(k), right = pick(k);
      std::vector<Rational> lambda(k * provider.n());
      for (auto& q : lambda) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
      }
      FSVector u, v;
      for (std::uint32_t p = 0; p < k; ++p)
        for (std::uint32_t l = 0; l < provider.n(); ++l) {
          u += lambda[p * provider.n() + l] * provider.coordinate(left[p], l);
          v += lambda[p * provider.n() + l] * provider.coordinate(right[p], l);
        }
      auto const nu = provider.ambient_norm(u), nv = provider.ambient_norm(v);
      if (nu != nv)
        r.falsify("norm depends on the index tuple", {{"left", left},
                                                      {"right", right},
                                                      {"left_norm", qlinalg::to_string(nu)},
                                                      {"right_norm", qlinalg::to_string(nv)}});
    }
  });
  return r;
}

}  // namespace soplab::amalgam
