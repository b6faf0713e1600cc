#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soplab/amalgam/provider.hpp"

namespace soplab::amalgam {

enum class NormTag : std::int8_t { Plus = 1, Minus = -1, Zero = 0 };

inline constexpr std::array<NormTag, 3> kAllTags{NormTag::Plus, NormTag::Minus, NormTag::Zero};
std::string to_string(NormTag tag);

/// V_m with formal basis {b*_ℓ : ℓ < n*} ∪ {b_{i,ℓ} : n* ≤ ℓ < n, i ≤ m},
/// encoded as E-tagged coordinates. Block k < m is span(b̄_k, b̄_{k+1}) and
/// carries three polyhedral norms.
///
/// The coordinate encoding does not depend on m, so a vector of ⟨b̄_0⟩ means
/// the same thing in every stage.
class AmalgamSpace {
 public:
  AmalgamSpace(SequenceProvider provider, std::uint32_t m);

  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return provider_.n(); }
  std::uint32_t nstar() const { return provider_.nstar(); }
  SequenceProvider const& provider() const { return provider_; }

  /// b_{i,ℓ}; the star b*_ℓ for ℓ < n*, whatever i is.
  static BasisIndex coord(std::uint32_t n, std::uint32_t nstar, std::uint32_t i, std::uint32_t ell);
  BasisIndex coord(std::uint32_t i, std::uint32_t ell) const { return coord(n(), nstar(), i, ell); }
  bool is_star(BasisIndex c) const { return c.index < nstar(); }
  /// Tuple position i of a non-star coordinate.
  std::uint32_t position(BasisIndex c) const;
  std::uint32_t slot(BasisIndex c) const;

  std::vector<BasisIndex> tuple_coords(std::uint32_t i) const;
  std::vector<BasisIndex> block_coords(std::uint32_t k) const;
  std::vector<BasisIndex> all_coords() const;
  bool contains(FSVector const& v) const;
  bool in_vminus(FSVector const& v) const;

  /// Σ_ℓ coeffs[ℓ]·b_{i,ℓ}.
  FSVector tuple_vector(std::uint32_t i, std::vector<Rational> const& coeffs) const;
  /// g_{from,to}: b̄_from ↦ b̄_to on ⟨b̄_from⟩ (stars fixed).
  FSVector shift(FSVector const& v, std::uint32_t from, std::uint32_t to) const;

  /// h₁: b_{i,ℓ} ↦ ā_{i,ℓ}.
  FSVector h1(FSVector const& v) const;
  /// h₋₁ realized on the window 0..m by reversal: b_{i,ℓ} ↦ ā_{m-i,ℓ}.
  FSVector hminus(FSVector const& v) const;

  PolyhedralNorm const& block_norm(std::uint32_t k, NormTag tag) const;
  std::vector<PolyhedralNorm> block_norms(NormTag tag) const;

 private:
  SequenceProvider provider_;
  std::uint32_t m_;
  std::vector<std::array<PolyhedralNorm, 3>> norms_;  // Plus, Minus, Zero
};

AmalgamSpace build_amalgam(SequenceProvider provider, std::uint32_t m);

/// t = Σ_k blocks[k] with blocks[k] ∈ B'_k. The refined form, when present,
/// has t_p = -r'_p + r'_{p+1} + s_p with r'_p ∈ ⟨b̄_p⟩ and s_p ∈ V⁻.
struct Decomposition {
  std::vector<FSVector> blocks;
  struct Refined {
    std::vector<FSVector> r_prime;  // p = 0..k
    std::vector<FSVector> s;        // p < k
  };
  std::optional<Refined> refined;

  FSVector sum() const;
};

struct InfConvResult {
  Rational value;
  Decomposition decomposition;
  std::size_t pivots = 0;
};

/// min Σ_k N_k(t_k) subject to t_k ∈ span(coords of N_k) and Σ t_k = t, as an
/// exact LP. Throws Error(Domain) when t leaves the span of the blocks.
InfConvResult infimal_convolution(std::vector<PolyhedralNorm> const& blocks, FSVector const& t);

InfConvResult infconv_norm(AmalgamSpace const& space, FSVector const& t, NormTag tag);

/// Extracts r'_p and s_p from a decomposition of r_m = r' + g_m(r'') over the
/// blocks of the space. Throws Error(Shape) when dec is not of that form.
Decomposition refine_decomposition(AmalgamSpace const& space, Decomposition dec, FSVector const& r1,
                                   FSVector const& r2);

}  // namespace soplab::amalgam
