#pragma once

#include <cstdint>

#include "soplab/qlinalg/fsvector.hpp"

namespace soplab::banach {

using qlinalg::FSVector;
using qlinalg::Rational;

/// The two-variable term (n-2ℓ)·x + (n-2ℓ+1)·y. Terms are equal when their
/// coefficients are, so Term(n, ℓ) == Term(n+2, ℓ+1).
class Term {
 public:
  Term(std::uint32_t n, std::uint32_t ell);

  std::uint32_t n() const { return n_; }
  std::uint32_t ell() const { return ell_; }
  long x_coeff() const { return static_cast<long>(n_) - 2 * static_cast<long>(ell_); }
  long y_coeff() const { return x_coeff() + 1; }

  FSVector operator()(FSVector const& x, FSVector const& y) const;

  friend bool operator==(Term const& a, Term const& b) {
    return a.x_coeff() == b.x_coeff() && a.y_coeff() == b.y_coeff();
  }

 private:
  std::uint32_t n_;
  std::uint32_t ell_;
};

/// A pair of vectors (x₁, x₂): one node of the φ_n graph.
struct TuplePair {
  FSVector first;
  FSVector second;

  friend bool operator==(TuplePair const&, TuplePair const&) = default;
};

/// The canonical chain node (a_α, b_α).
TuplePair chain_pair(std::uint32_t alpha);

/// c_{n,ℓ,α} = (n-2ℓ)a_α + (n-2ℓ+1)b_α.
struct WitnessVector {
  std::uint32_t n = 0;
  std::uint32_t ell = 0;
  std::uint32_t alpha = 0;
  FSVector vector;

  /// Closed form of |f_γ(c)|: |n-2ℓ| when α < γ, |n-2ℓ+1| when α ≥ γ.
  Rational threshold_abs(std::uint32_t gamma) const;
};

/// Requires n ≥ 3 and ell ≤ n; Error(Range) otherwise.
WitnessVector witness_c(std::uint32_t n, std::uint32_t ell, std::uint32_t alpha);

}  // namespace soplab::banach
