#pragma once

#include <vector>

#include "soplab/qlinalg/fsvector.hpp"

namespace soplab::qlinalg {

/// value(v) = max_i |f_i(v)| over a finite list of linear functionals, each a
/// coefficient map on a designated coordinate subspace. A seminorm in general;
/// a norm when the functionals span the dual of the subspace.
class PolyhedralNorm {
 public:
  PolyhedralNorm() = default;
  /// Functionals are deduplicated up to sign; zero functionals are dropped.
  PolyhedralNorm(std::vector<BasisIndex> coords, std::vector<FSVector> functionals);

  /// max-abs-coordinate norm on span(coords).
  static PolyhedralNorm max_abs(std::vector<BasisIndex> coords);
  /// The B0 seminorm restricted to span(coords); coords must be A/B symbols.
  static PolyhedralNorm b0_restricted(std::vector<BasisIndex> coords);

  /// Throws Error(Domain) when v leaves the coordinate subspace.
  Rational operator()(FSVector const& v) const { return value(v); }
  Rational value(FSVector const& v) const;
  /// Index of a functional attaining the max (first one on ties).
  std::size_t argmax(FSVector const& v) const;

  bool contains(FSVector const& v) const;

  std::vector<BasisIndex> const& coords() const { return coords_; }
  std::vector<FSVector> const& functionals() const { return functionals_; }

  /// Norm of max(this, other) on the common coordinate set.
  PolyhedralNorm pointwise_max(PolyhedralNorm const& other) const;

  /// Composes with a linear map given on the basis: the result evaluates
  /// v ↦ this(Σ v_c · image(c)) on span(domain).
  template <typename F>
  PolyhedralNorm pullback(std::vector<BasisIndex> domain, F&& image) const {
    std::vector<FSVector> pulled;
    pulled.reserve(functionals_.size());
    for (auto const& f : functionals_) {
      FSVector g;
      for (auto c : domain) g.set(c, f.dot(image(c)));
      pulled.push_back(std::move(g));
    }
    return PolyhedralNorm(std::move(domain), std::move(pulled));
  }

 private:
  std::vector<BasisIndex> coords_;  // sorted, unique
  std::vector<FSVector> functionals_;
};

}  // namespace soplab::qlinalg
