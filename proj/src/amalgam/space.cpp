#include "soplab/amalgam/space.hpp"

#include <functional>
#include <set>

#include "soplab/error.hpp"

namespace soplab::amalgam {

using qlinalg::e_;

std::string to_string(NormTag tag) {
  switch (tag) {
    case NormTag::Plus:
      return "1";
    case NormTag::Minus:
      return "-1";
    case NormTag::Zero:
      return "0";
  }
  return "?";
}

namespace {

std::size_t tag_slot(NormTag tag) {
  return tag == NormTag::Plus ? 0 : tag == NormTag::Minus ? 1 : 2;
}

PolyhedralNorm induced(SequenceProvider const& provider, std::vector<BasisIndex> const& domain,
                       std::function<FSVector(BasisIndex)> const& image) {
  std::set<BasisIndex> ambient;
  for (auto c : domain)
    for (auto const& [bi, x] : image(c)) ambient.insert(bi);
  auto const norm = provider.ambient_on({ambient.begin(), ambient.end()});
  return norm.pullback(domain, image);
}

}  // namespace

BasisIndex AmalgamSpace::coord(std::uint32_t n, std::uint32_t nstar, std::uint32_t i,
                               std::uint32_t ell) {
  if (ell >= n) fail(ErrorKind::Range, "tuple slot out of range");
  if (ell < nstar) return e_(ell);
  return e_(nstar + i * (n - nstar) + (ell - nstar));
}

std::uint32_t AmalgamSpace::position(BasisIndex c) const {
  if (is_star(c)) fail(ErrorKind::Domain, "star coordinates have no position");
  return (c.index - nstar()) / (n() - nstar());
}

std::uint32_t AmalgamSpace::slot(BasisIndex c) const {
  if (is_star(c)) return c.index;
  return nstar() + (c.index - nstar()) % (n() - nstar());
}

AmalgamSpace::AmalgamSpace(SequenceProvider provider, std::uint32_t m)
    : provider_(std::move(provider)), m_(m) {
  if (m_ < 1) fail(ErrorKind::Range, "amalgam stage must be >= 1");
  provider_.check_basis(m_);
  auto const plus = [this](BasisIndex c) {
    return provider_.coordinate(is_star(c) ? 0 : position(c), slot(c));
  };
  auto const minus = [this](BasisIndex c) {
    return provider_.coordinate(is_star(c) ? 0 : m_ - position(c), slot(c));
  };
  for (std::uint32_t k = 0; k < m_; ++k) {
    auto const coords = block_coords(k);
    auto p = induced(provider_, coords, plus);
    auto q = induced(provider_, coords, minus);
    auto z = p.pointwise_max(q);
    norms_.push_back({std::move(p), std::move(q), std::move(z)});
  }
}

std::vector<BasisIndex> AmalgamSpace::tuple_coords(std::uint32_t i) const {
  std::vector<BasisIndex> out;
  for (std::uint32_t l = 0; l < n(); ++l) out.push_back(coord(i, l));
  return out;
}

std::vector<BasisIndex> AmalgamSpace::block_coords(std::uint32_t k) const {
  if (k >= m_) fail(ErrorKind::Range, "block index out of range");
  auto out = tuple_coords(k);
  for (std::uint32_t l = nstar(); l < n(); ++l) out.push_back(coord(k + 1, l));
  return out;
}

std::vector<BasisIndex> AmalgamSpace::all_coords() const {
  std::vector<BasisIndex> out;
  for (std::uint32_t l = 0; l < nstar(); ++l) out.push_back(coord(0, l));
  for (std::uint32_t i = 0; i <= m_; ++i)
    for (std::uint32_t l = nstar(); l < n(); ++l) out.push_back(coord(i, l));
  return out;
}

bool AmalgamSpace::contains(FSVector const& v) const {
  for (auto const& [bi, c] : v)
    if (bi.kind != qlinalg::Kind::E || (!is_star(bi) && position(bi) > m_)) return false;
  return true;
}

bool AmalgamSpace::in_vminus(FSVector const& v) const {
  for (auto const& [bi, c] : v)
    if (bi.kind != qlinalg::Kind::E || !is_star(bi)) return false;
  return true;
}

FSVector AmalgamSpace::tuple_vector(std::uint32_t i, std::vector<Rational> const& coeffs) const {
  if (coeffs.size() != n()) fail(ErrorKind::Shape, "expected one coefficient per tuple slot");
  FSVector v;
  for (std::uint32_t l = 0; l < n(); ++l) v.add_to(coord(i, l), coeffs[l]);
  return v;
}

FSVector AmalgamSpace::shift(FSVector const& v, std::uint32_t from, std::uint32_t to) const {
  return v.reindexed([&](BasisIndex c) {
    if (c.kind != qlinalg::Kind::E || (!is_star(c) && position(c) != from))
      fail(ErrorKind::Domain, "vector is not in the span of tuple " + std::to_string(from));
    return coord(to, slot(c));
  });
}

FSVector AmalgamSpace::h1(FSVector const& v) const {
  if (!contains(v)) fail(ErrorKind::Domain, "vector is outside V_m");
  FSVector out;
  for (auto const& [c, x] : v)
    out += x * provider_.coordinate(is_star(c) ? 0 : position(c), slot(c));
  return out;
}

FSVector AmalgamSpace::hminus(FSVector const& v) const {
  if (!contains(v)) fail(ErrorKind::Domain, "vector is outside V_m");
  FSVector out;
  for (auto const& [c, x] : v)
    out += x * provider_.coordinate(is_star(c) ? 0 : m_ - position(c), slot(c));
  return out;
}

PolyhedralNorm const& AmalgamSpace::block_norm(std::uint32_t k, NormTag tag) const {
  if (k >= m_) fail(ErrorKind::Range, "block index out of range");
  return norms_[k][tag_slot(tag)];
}

std::vector<PolyhedralNorm> AmalgamSpace::block_norms(NormTag tag) const {
  std::vector<PolyhedralNorm> out;
  for (auto const& b : norms_) out.push_back(b[tag_slot(tag)]);
  return out;
}

AmalgamSpace build_amalgam(SequenceProvider provider, std::uint32_t m) {
  return AmalgamSpace(std::move(provider), m);
}

FSVector Decomposition::sum() const {
  FSVector s;
  for (auto const& t : blocks) s += t;
  return s;
}

Decomposition refine_decomposition(AmalgamSpace const& space, Decomposition dec, FSVector const& r1,
                                   FSVector const& r2) {
  auto const k = space.m();
  if (dec.blocks.size() != k) fail(ErrorKind::Shape, "one block per B'_p expected");
  auto const top = space.shift(r2, 0, k);
  space.shift(r1, 0, 0);  // membership in ⟨b̄_0⟩
  if (dec.sum() != r1 + top) fail(ErrorKind::Shape, "blocks do not sum to r' + g_k(r'')");
  for (std::uint32_t p = 0; p < k; ++p)
    if (!space.block_norm(p, NormTag::Plus).contains(dec.blocks[p]))
      fail(ErrorKind::Shape, "block " + std::to_string(p) + " leaves B'_p");

  auto part_at = [&](FSVector const& v, std::uint32_t i) {
    FSVector out;
    for (auto const& [c, x] : v)
      if (!space.is_star(c) && space.position(c) == i) out.set(c, x);
    return out;
  };
  Decomposition::Refined ref;
  ref.r_prime.push_back(-r1);
  for (std::uint32_t p = 1; p < k; ++p) {
    auto up = part_at(dec.blocks[p - 1], p);
    // The two blocks meeting at position p cancel there.
    if (up + part_at(dec.blocks[p], p) != FSVector())
      fail(ErrorKind::Shape, "blocks do not telescope at position " + std::to_string(p));
    ref.r_prime.push_back(std::move(up));
  }
  ref.r_prime.push_back(top);
  FSVector total;
  for (std::uint32_t p = 0; p < k; ++p) {
    auto s = dec.blocks[p] + ref.r_prime[p] - ref.r_prime[p + 1];
    if (!space.in_vminus(s)) fail(ErrorKind::Consistency, "s_p left V-");
    total += s;
    ref.s.push_back(std::move(s));
  }
  if (!total.is_zero()) fail(ErrorKind::Consistency, "sum of s_p is not zero");
  dec.refined = std::move(ref);
  return dec;
}

}  // namespace soplab::amalgam
