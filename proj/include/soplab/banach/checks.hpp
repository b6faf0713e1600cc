#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "soplab/banach/phi.hpp"
#include "soplab/report.hpp"

namespace soplab::banach {

/// Both equalities over ℓ < n, m ≤ n, α < β < range, plus the ≤ 2m+2 cap.
/// Claim "banach.eq1_eq2".
CheckReport check_eq1_eq2(std::uint32_t n, std::uint32_t range);

/// φ_n on every pair α < β < length of ⟨(a_α, b_α)⟩. Claim "banach.chain".
CheckReport chain_verify(std::uint32_t n, std::uint32_t length);
/// Same check over an arbitrary sequence of nodes.
CheckReport chain_verify(std::uint32_t n, std::vector<TuplePair> const& nodes);

/// Random tuples: half from a bounded-height grid over small indices, half
/// perturbed chain witnesses (which keep the path conjuncts alive).
class TupleSampler {
 public:
  explicit TupleSampler(std::uint64_t seed, long height = 16, std::uint32_t max_index = 8)
      : rng_(seed), height_(height), max_index_(max_index) {}

  TuplePair grid();
  /// (a_α, b_α) plus small noise, scaled into (0, 1].
  TuplePair perturbed_chain(std::uint32_t alpha);
  TuplePair next();
  /// m+1 nodes for a cycle attempt.
  std::vector<TuplePair> cycle_attempt(std::uint32_t m);

  std::mt19937_64& rng() { return rng_; }

 private:
  Rational small_rational();
  FSVector grid_vector();

  std::mt19937_64 rng_;
  long height_;
  std::uint32_t max_index_;
};

struct CycleCertificate {
  bool path_holds = false;  // every path step conjunct holds
  Rational telescoped;      // Σ_i ‖τ_{i+1}(c_{i+1}) - τ_i(c_i)‖
  Rational closing;         // ‖τ_m(c_m) - τ_0(c_0)‖
  Rational bound;           // 2m
  Rational required;        // 2m+1
  bool closed = false;      // φ_n held on every edge, closing one included
};

/// Evaluates the cycle c_0 → … → c_m → c_0 and, when the path conjuncts hold,
/// the triangle-inequality bound against the closing edge. Needs 2 < m ≤ n.
CycleCertificate certify_cycle(std::uint32_t n, std::vector<TuplePair> const& nodes);

/// Claim "banach.cycle".
CheckReport cycle_search_and_certify(std::uint32_t n, std::uint32_t m, std::uint64_t trials,
                                     std::uint64_t seed);

/// Term(n, ℓ) == Term(n+2, ℓ+1) for 3 ≤ n ≤ n_max, ℓ ≤ n. Claim "banach.term_shift".
CheckReport term_shift_identity(std::uint32_t n_max);

/// φ_{n+2} ⇒ φ_n on sampled pairs. Claim "banach.entailment".
CheckReport entailment_spotcheck(std::uint32_t n, std::uint64_t samples, std::uint64_t seed);

/// ⋀_{k<N} φ_{2k+3}(x, y). Claim "banach.type_p".
CheckReport type_p_eval(std::uint32_t N, TuplePair const& x, TuplePair const& y);
bool type_p_holds(std::uint32_t N, TuplePair const& x, TuplePair const& y);

/// a_α, b_α (α < range) are nonzero and pairwise distinct modulo the kernel.
/// Claim "banach.distinct".
CheckReport distinctness_check(std::uint32_t range);

/// a_0 - a_1 - b_1 + b_0 has B0-seminorm zero. Claim "banach.kernel".
CheckReport kernel_witness_check();

nlohmann::json to_json(TuplePair const& t);

}  // namespace soplab::banach
