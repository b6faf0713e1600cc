#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "soplab/qlinalg/polyhedral_norm.hpp"
#include "soplab/report.hpp"

namespace soplab::amalgam {

using qlinalg::BasisIndex;
using qlinalg::FSVector;
using qlinalg::PolyhedralNorm;
using qlinalg::Rational;

enum class Ambient : std::uint8_t { B0, MaxAbs };

/// Index expression s·i + c. Scale 0 gives a constant coordinate.
struct IndexExpr {
  std::uint32_t scale = 1;
  std::uint32_t offset = 0;
  std::uint32_t at(std::uint32_t i) const { return scale * i + offset; }
};

struct CoordTerm {
  Rational coeff;
  qlinalg::Kind kind = qlinalg::Kind::E;
  IndexExpr index;
};

/// One tuple coordinate: ā_{i,ℓ} = Σ coeff · symbol[index(i)].
struct CoordRule {
  std::vector<CoordTerm> terms;
  bool constant() const;
};

/// A concrete sequence ⟨ā_i⟩ of n-tuples in a computable normed space,
/// the first nStar coordinates constant.
class SequenceProvider {
 public:
  SequenceProvider(std::string name, Ambient ambient, std::uint32_t nstar,
                   std::vector<CoordRule> rules);

  /// Pairs (a_α, b_α) in B0: n = 2, nStar = 0.
  static SequenceProvider canonical();
  /// e_i under the max-abs norm: n = 1, nStar = 0.
  static SequenceProvider simple();

  std::string const& name() const { return name_; }
  Ambient ambient() const { return ambient_; }
  std::uint32_t n() const { return static_cast<std::uint32_t>(rules_.size()); }
  std::uint32_t nstar() const { return nstar_; }
  std::vector<CoordRule> const& rules() const { return rules_; }

  FSVector coordinate(std::uint32_t i, std::uint32_t ell) const;
  std::vector<FSVector> tuple_at(std::uint32_t i) const;

  Rational ambient_norm(FSVector const& v) const;
  /// The ambient norm as a polyhedral norm on span(coords).
  PolyhedralNorm ambient_on(std::vector<BasisIndex> coords) const;

  /// Constants agree across i ≤ m and the whole family over i ≤ m is
  /// linearly independent. Throws Error(ProviderInvariant) otherwise.
  void check_basis(std::uint32_t m) const;

 private:
  std::string name_;
  Ambient ambient_;
  std::uint32_t nstar_;
  std::vector<CoordRule> rules_;
};

/// Randomized exact test: norms of random combinations of tuples at two
/// increasing index lists of the same length agree. Claim
/// "amalgam.indiscernible".
CheckReport indiscernibility_test(SequenceProvider const& provider, std::uint32_t window,
                                  std::uint32_t samples, std::uint64_t seed);

/// Declarative provider text:
///
///   name = pairs
///   ambient = b0          # or maxabs
///   nstar = 0
///   coord = A[i]
///   coord = B[i] - 1/2*A[2*i+1]
///
/// Coordinates are listed in order, the first nstar of them constant.
SequenceProvider parse_provider(std::string const& text);
SequenceProvider load_provider(std::string const& path);

/// "canonical", "simple", or a path to a provider file.
SequenceProvider provider_by_name(std::string const& name_or_path);

}  // namespace soplab::amalgam
