#pragma once

// Direct transcription of sup_γ |f_γ(v)|, written against the raw
// definition with a generous γ range. Kept apart from the library sweep.

#include <algorithm>

#include "soplab/qlinalg/fsvector.hpp"

namespace soplab::testing {

inline qlinalg::Rational oracle_f(std::uint32_t gamma, qlinalg::FSVector const& v) {
  qlinalg::Rational s = 0;
  for (auto const& [bi, c] : v) {
    bool const below = bi.index < gamma;
    if ((bi.kind == qlinalg::Kind::A && below) || (bi.kind == qlinalg::Kind::B && !below)) s += c;
  }
  return s;
}

inline qlinalg::Rational oracle_b0(qlinalg::FSVector const& v) {
  std::uint32_t top = 0;
  for (auto const& [bi, c] : v) top = std::max(top, bi.index);
  qlinalg::Rational best = 0;
  for (std::uint32_t g = 0; g <= top + 8; ++g) {
    qlinalg::Rational x = oracle_f(g, v);
    if (x < 0) x = -x;
    best = std::max(best, x);
  }
  return best;
}

}  // namespace soplab::testing
