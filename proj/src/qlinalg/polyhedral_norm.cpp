#include "soplab/qlinalg/polyhedral_norm.hpp"

#include <algorithm>

#include "soplab/error.hpp"
#include "soplab/qlinalg/seminorm.hpp"

namespace soplab::qlinalg {

PolyhedralNorm::PolyhedralNorm(std::vector<BasisIndex> coords, std::vector<FSVector> functionals)
    : coords_(std::move(coords)) {
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
  for (auto& f : functionals) {
    for (auto const& [bi, c] : f)
      if (!std::binary_search(coords_.begin(), coords_.end(), bi))
        fail(ErrorKind::Domain,
             "functional uses " + to_string(bi) + " outside the coordinate subspace");
    if (f.is_zero()) continue;
    auto const neg = -f;
    bool dup = std::any_of(functionals_.begin(), functionals_.end(),
                           [&](FSVector const& g) { return g == f || g == neg; });
    if (!dup) functionals_.push_back(std::move(f));
  }
}

PolyhedralNorm PolyhedralNorm::max_abs(std::vector<BasisIndex> coords) {
  std::vector<FSVector> fs;
  for (auto c : coords) fs.push_back(FSVector::unit(c));
  return PolyhedralNorm(std::move(coords), std::move(fs));
}

PolyhedralNorm PolyhedralNorm::b0_restricted(std::vector<BasisIndex> coords) {
  std::uint32_t top = 0;
  for (auto c : coords) top = std::max(top, c.index);
  std::vector<FSVector> fs;
  for (std::uint32_t g = 0; g <= top + 1; ++g)
    fs.push_back(ThresholdFunctional{g}.restricted_to(coords));
  return PolyhedralNorm(std::move(coords), std::move(fs));
}

bool PolyhedralNorm::contains(FSVector const& v) const {
  return std::all_of(v.begin(), v.end(), [&](auto const& e) {
    return std::binary_search(coords_.begin(), coords_.end(), e.first);
  });
}

Rational PolyhedralNorm::value(FSVector const& v) const {
  if (!contains(v))
    fail(ErrorKind::Domain,
         "vector " + to_string(v) + " lies outside the norm's coordinate subspace");
  Rational best = 0;
  for (auto const& f : functionals_) {
    Rational x = abs(f.dot(v));
    if (x > best) best = std::move(x);
  }
  return best;
}

std::size_t PolyhedralNorm::argmax(FSVector const& v) const {
  if (!contains(v)) fail(ErrorKind::Domain, "vector outside coordinate subspace");
  std::size_t arg = 0;
  Rational best = -1;
  for (std::size_t i = 0; i < functionals_.size(); ++i) {
    Rational x = abs(functionals_[i].dot(v));
    if (x > best) {
      best = std::move(x);
      arg = i;
    }
  }
  return arg;
}

PolyhedralNorm PolyhedralNorm::pointwise_max(PolyhedralNorm const& other) const {
  if (coords_ != other.coords_)
    fail(ErrorKind::Domain, "pointwise max needs a common coordinate subspace");
  auto fs = functionals_;
  fs.insert(fs.end(), other.functionals_.begin(), other.functionals_.end());
  return PolyhedralNorm(coords_, std::move(fs));
}

}  // namespace soplab::qlinalg
