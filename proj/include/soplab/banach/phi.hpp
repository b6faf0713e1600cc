#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "soplab/banach/term.hpp"
#include "soplab/qlinalg/polyhedral_norm.hpp"

namespace soplab::banach {

/// Marker for the threshold seminorm on span{a_α, b_α}.
struct B0Seminorm {};

using NormContext = std::variant<B0Seminorm, qlinalg::PolyhedralNorm>;

/// Throws Error(Domain) when v is outside the context's space.
Rational norm_in(NormContext const& ctx, FSVector const& v);

enum class ConjunctFamily : std::uint8_t {
  Step,   // ‖τ_{ℓ+1}(y) - τ_ℓ(x)‖ ≤ 2,        ℓ < n
  Lower,  // ‖τ_m(x) - τ_0(y)‖ ≥ 2m+1,          m ≤ n
  Upper,  // ‖τ_m(x) - τ_0(y)‖ ≤ 2m+2,          m ≤ n
};

std::string to_string(ConjunctFamily family);

struct Conjunct {
  ConjunctFamily family;
  std::uint32_t index;  // ℓ for Step, m otherwise
  Rational bound;
};

/// φ_n as structured data: n Step conjuncts, n+1 Lower, n+1 Upper.
struct PhiFormula {
  std::uint32_t n = 0;
  std::vector<Conjunct> conjuncts;

  explicit PhiFormula(std::uint32_t n);
  std::size_t count(ConjunctFamily family) const;
};

struct ConjunctValue {
  Conjunct conjunct;
  Rational lhs;
  bool holds = false;
};

struct GraphEdgeReport {
  std::string from;
  std::string to;
  std::uint32_t n = 0;
  std::vector<ConjunctValue> values;
  bool verdict = false;
};

/// Evaluates every conjunct of φ_n(x, y) exactly.
GraphEdgeReport phi_eval(std::uint32_t n, TuplePair const& x, TuplePair const& y,
                         NormContext const& ctx = B0Seminorm{}, std::string from = "x",
                         std::string to = "y");

/// Same verdict as phi_eval, stopping at the first failing conjunct.
bool phi_holds(std::uint32_t n, TuplePair const& x, TuplePair const& y,
               NormContext const& ctx = B0Seminorm{});

}  // namespace soplab::banach
