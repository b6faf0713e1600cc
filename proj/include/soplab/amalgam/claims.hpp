#pragma once

#include <cstdint>
#include <vector>

#include "soplab/amalgam/space.hpp"
#include "soplab/report.hpp"

namespace soplab::amalgam {

/// Σ_ℓ coeffs[ℓ]·b_{0,ℓ}: an element of ⟨b̄_0⟩ for the provider's shape.
FSVector base_vector(SequenceProvider const& provider, std::vector<Rational> const& coeffs);

struct ProfileEntry {
  std::uint32_t k = 0;
  NormTag tag = NormTag::Plus;
  Rational value;
};

/// ‖r_k‖_tag for 1 ≤ k ≤ K and all three tags, r_k = r' + g_k(r''), in the
/// stage-K space. Ordered by k, then tag (1, -1, 0).
std::vector<ProfileEntry> sequence_norm_profile(SequenceProvider const& provider,
                                                FSVector const& r1, FSVector const& r2,
                                                std::uint32_t K);

/// Three reports at m = j²:
///   "amalgam.clm_conv.1"  monotone in k ≤ m and bounded by ‖h₁(r')‖ + ‖h₁(r'')‖;
///   "amalgam.clm_conv.2"  ‖r_m‖_0 ≥ ‖r_m‖_{±1} ≥ (1+2/j)⁻¹‖r_j‖_0;
///   "amalgam.main_claim"  ‖c_q - c_k‖_1 ≥ (1+2/(q-k))⁻¹‖h₁(c_q - c_k)‖_{B_{k,q}} on
///                         sampled c_k, c_q.
std::vector<CheckReport> verify_convergence_claims(SequenceProvider const& provider,
                                                   FSVector const& r1, FSVector const& r2,
                                                   std::uint32_t j, std::uint32_t samples = 8,
                                                   std::uint64_t seed = 0);

struct RhoEstimate {
  Rational lower;
  Rational upper;
  std::uint32_t stage = 0;           // jMax²
  Rational forward;                  // ‖r' + g_m(r'')‖_1
  Rational swapped;                  // ‖r'' + g_m(r')‖_1
  Rational reversed;                 // ‖r' + g_m(r'')‖_{-1}
  std::vector<Rational> lower_by_j;  // min(‖r_{j²}‖_1, ‖r_{j²}‖_{-1}), j = 2..jMax
};

RhoEstimate rho_estimate(SequenceProvider const& provider, FSVector const& r1, FSVector const& r2,
                         std::uint32_t j_max);

/// Interval sanity plus the symmetry surrogate. Claim "amalgam.rho".
CheckReport rho_check(SequenceProvider const& provider, FSVector const& r1, FSVector const& r2,
                      std::uint32_t j_max);

/// ‖t‖_0 ≥ max(‖t‖_1, ‖t‖_{-1}) on random t ∈ V_m; equality is only counted.
/// Claim "amalgam.tag0".
CheckReport tag_zero_dominance(SequenceProvider const& provider, std::uint32_t m,
                               std::uint32_t samples, std::uint64_t seed);

}  // namespace soplab::amalgam
