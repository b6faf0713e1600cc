#include "soplab/groups/affine.hpp"

#include "soplab/error.hpp"

namespace soplab::groups {

namespace {

// 2^k as an exact rational.
Rational pow2(long k) {
  Rational r(1);
  if (k >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}

}  // namespace

AffineDyadicMap::AffineDyadicMap(long scale_exp, Rational offset)
    : k_(scale_exp), q_(std::move(offset)) {
  q_.canonicalize();
  if (!qlinalg::is_dyadic(q_))
    fail(ErrorKind::Domain, "affine offset " + qlinalg::to_string(q_) + " is not dyadic");
}

Rational AffineDyadicMap::apply(Rational const& t) const {
  Rational const out = pow2(k_) * t + q_;
  return out;
}

AffineDyadicMap AffineDyadicMap::inverse() const {
  // t = 2^k s + q  ⇔  s = 2^-k t − 2^-k q
  Rational const q = -(pow2(-k_) * q_);
  return {-k_, q};
}

AffineDyadicMap AffineDyadicMap::pow(long n) const {
  AffineDyadicMap base = n < 0 ? inverse() : *this, out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

AffineDyadicMap operator*(AffineDyadicMap const& f, AffineDyadicMap const& g) {
  Rational const q = pow2(f.k_) * g.q_ + f.q_;
  return {f.k_ + g.k_, q};
}

std::string to_string(AffineDyadicMap const& f) {
  return "t -> 2^" + std::to_string(f.scale_exp()) + " t + " + qlinalg::to_string(f.offset());
}

AffineDyadicMap bs12_generator(GenSymbol const& g) {
  if (g == "a") return AffineDyadicMap::translation(Rational(1));
  if (g == "b") return AffineDyadicMap::scaling(-1);
  fail(ErrorKind::Domain, "generator " + g + " is not in the BS(1,2) model");
}

AffineDyadicMap evaluate_bs12(GroupWord const& w) {
  AffineDyadicMap out;
  for (auto const& l : w.letters()) {
    auto const g = bs12_generator(l.gen);
    out = out * (l.exp > 0 ? g : g.inverse());
  }
  return out;
}

CheckReport bs12_chain_check() {
  CheckReport r;
  r.claim = "groups.chain_model";
  r.params["model"] = "x0: t -> t+1, x1: t -> t/2";
  r.notes.push_back("relation read as x^y = x^2 with x^y = y^-1 x y");
  auto const x0 = bs12_generator("a"), x1 = bs12_generator("b");
  auto const conj = x1.inverse() * x0 * x1;
  auto const square = x0 * x0;
  auto const reversed = x0.inverse() * x1 * x0;
  auto const x1sq = x1 * x1;
  r.values["conjugate_offset"] = qlinalg::to_string(conj.offset());
  r.values["conjugate_scale_exp"] = std::to_string(conj.scale_exp()) + "/1";
  r.values["square_offset"] = qlinalg::to_string(square.offset());
  r.values["reversed_holds"] = reversed == x1sq ? "1/1" : "0/1";
  nlohmann::json maps = {{"x0", to_string(x0)},
                         {"x1", to_string(x1)},
                         {"x1^-1 x0 x1", to_string(conj)},
                         {"x0^2", to_string(square)}};
  if (conj != square) r.falsify("x1^-1 x0 x1 differs from x0^2", maps);
  if (x0.is_identity() || x1.is_identity()) r.falsify("a chain element is the identity", maps);
  if (x0 == x1) r.falsify("chain elements coincide", maps);
  if (reversed == x1sq) r.falsify("reversed relation unexpectedly holds", maps);
  // Pointwise agreement on sample points guards the composition formula.
  for (long t = -3; t <= 3; ++t) {
    Rational const pt = qlinalg::make_rational(t, 3);
    if (conj.apply(pt) != x1.inverse().apply(x0.apply(x1.apply(pt))))
      r.falsify("composition disagrees with pointwise evaluation", {{"t", qlinalg::to_string(pt)}});
  }
  return r;
}

}  // namespace soplab::groups
