#pragma once

#include <cstddef>
#include <vector>

#include "soplab/groups/britton.hpp"
#include "soplab/groups/free_amalgam.hpp"
#include "soplab/groups/todd_coxeter.hpp"
#include "soplab/report.hpp"

namespace soplab::groups {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// Enumerates the cosets of the trivial subgroup. Pass when the table closes
/// (and verifies), inconclusive on overflow.
CheckReport enumerate_check(Presentation const& pres, std::size_t max_cosets);

/// Closed(1) on the triangle preset: any three elements pairwise related
/// around a triangle are trivial, so no triangle of distinct elements exists.
/// Overflow is inconclusive; a closed table of index > 1 fails.
CheckReport triangle_refutation_check(std::size_t max_cosets = kDefaultMaxCosets,
                                      Presentation const& pres = preset("triangle"));

/// Probes chain-k. k = 2 is certified by the affine model; for k ≥ 3 an
/// overflow is reported inconclusive ("unresolved") and a collapse fails.
CheckReport chain_probe(int k, std::size_t max_cosets);

/// Checks that K is exactly the union of the factor relators under the
/// identification and, for the squaring pair, equals the Higman preset.
CheckReport flattening_check(FreeAmalgam const& amalgam, AdjacencyType const& type);

/// Each relator of the type, substituted along each pair, must hold in K.
/// A relator passes when it is cyclically a relator of K (or its inverse),
/// or when it traces to the identity in a closed coset table of K. If the
/// table overflows the remaining relators are inconclusive; if it closes
/// and a relator does not trace to the identity, the report fails.
CheckReport adjacency_type_check(Presentation const& k, std::vector<PairInstance> const& pairs,
                                 std::vector<GroupWord> const& relators,
                                 std::size_t max_cosets = 20'000);

}  // namespace soplab::groups
