#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "soplab/groups/presentation.hpp"

namespace soplab::groups {

enum class TableStatus { Closed, Overflow };

enum class Strategy {
  Hlt,     // relator-based with lookahead
  Felsch,  // definition-order filling with deduction processing
};

/// Result of a coset enumeration. Columns are 2g for generator g and 2g+1
/// for its inverse. A closed table is standardized: cosets are numbered in
/// the order a breadth-first walk from coset 0 meets them, so equal groups
/// give equal tables whatever strategy produced them.
struct CosetTable {
  TableStatus status = TableStatus::Overflow;
  std::size_t index = 0;  // number of cosets when closed
  std::size_t limit = 0;  // the maxCosets bound used
  std::vector<GenSymbol> generators;
  std::vector<std::vector<int>> rows;  // empty on overflow
  std::size_t total_defined = 0;
  std::size_t max_live = 0;

  bool closed() const { return status == TableStatus::Closed; }
  /// Coset reached from `coset` by reading `w`; -1 if a letter is undefined.
  int trace(int coset, GroupWord const& w) const;
  std::string status_text() const;  // "Closed(5)" or "Overflow(100000)"
};

/// Enumerates the cosets of ⟨subgroup⟩ in the group of `pres` with at most
/// `max_cosets` live cosets at any time. Throws Error(Range) if max_cosets is
/// zero, Error(Structural) for an invalid presentation, and
/// Error(Consistency) if a closed table fails verification.
CosetTable todd_coxeter(Presentation const& pres, std::vector<GroupWord> const& subgroup,
                        std::size_t max_cosets, Strategy strategy = Strategy::Hlt);

/// Re-checks a closed table without using any enumeration state: entries in
/// range, columns mutually inverse, every relator closes at every coset,
/// every subgroup generator closes at coset 0 and every coset is reachable.
/// Returns an empty string when sound, otherwise the first defect.
std::string verify_coset_table(CosetTable const& table, Presentation const& pres,
                               std::vector<GroupWord> const& subgroup);

}  // namespace soplab::groups
