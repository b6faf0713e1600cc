#include "soplab/banach/phi.hpp"

#include "soplab/error.hpp"
#include "soplab/qlinalg/seminorm.hpp"

namespace soplab::banach {

Rational norm_in(NormContext const& ctx, FSVector const& v) {
  if (std::holds_alternative<B0Seminorm>(ctx)) {
    if (!v.only_kinds({qlinalg::Kind::A, qlinalg::Kind::B}))
      fail(ErrorKind::Domain, "vector " + qlinalg::to_string(v) + " is not in B0");
    return qlinalg::seminorm_b0(v);
  }
  return std::get<qlinalg::PolyhedralNorm>(ctx).value(v);
}

std::string to_string(ConjunctFamily family) {
  switch (family) {
    case ConjunctFamily::Step:
      return "step";
    case ConjunctFamily::Lower:
      return "lower";
    case ConjunctFamily::Upper:
      return "upper";
  }
  return "?";
}

PhiFormula::PhiFormula(std::uint32_t n) : n(n) {
  if (n < 3) fail(ErrorKind::Range, "phi_n needs n >= 3");
  for (std::uint32_t l = 0; l < n; ++l) conjuncts.push_back({ConjunctFamily::Step, l, Rational(2)});
  for (std::uint32_t m = 0; m <= n; ++m)
    conjuncts.push_back({ConjunctFamily::Lower, m, Rational(2 * m + 1)});
  for (std::uint32_t m = 0; m <= n; ++m)
    conjuncts.push_back({ConjunctFamily::Upper, m, Rational(2 * m + 2)});
}

std::size_t PhiFormula::count(ConjunctFamily family) const {
  std::size_t c = 0;
  for (auto const& k : conjuncts)
    if (k.family == family) ++c;
  return c;
}

namespace {

Rational conjunct_lhs(std::uint32_t n, Conjunct const& c, TuplePair const& x, TuplePair const& y,
                      NormContext const& ctx) {
  if (c.family == ConjunctFamily::Step)
    return norm_in(ctx,
                   Term(n, c.index + 1)(y.first, y.second) - Term(n, c.index)(x.first, x.second));
  return norm_in(ctx, Term(n, c.index)(x.first, x.second) - Term(n, 0)(y.first, y.second));
}

bool satisfied(Conjunct const& c, Rational const& lhs) {
  return c.family == ConjunctFamily::Lower ? lhs >= c.bound : lhs <= c.bound;
}

}  // namespace

GraphEdgeReport phi_eval(std::uint32_t n, TuplePair const& x, TuplePair const& y,
                         NormContext const& ctx, std::string from, std::string to) {
  PhiFormula const phi(n);
  GraphEdgeReport out{std::move(from), std::move(to), n, {}, true};
  // The Lower and Upper families share their left-hand sides.
  std::vector<Rational> shared(n + 1);
  for (std::uint32_t m = 0; m <= n; ++m)
    shared[m] = norm_in(ctx, Term(n, m)(x.first, x.second) - Term(n, 0)(y.first, y.second));
  for (auto const& c : phi.conjuncts) {
    Rational lhs =
        c.family == ConjunctFamily::Step ? conjunct_lhs(n, c, x, y, ctx) : shared[c.index];
    bool const ok = satisfied(c, lhs);
    out.verdict = out.verdict && ok;
    out.values.push_back({c, std::move(lhs), ok});
  }
  return out;
}

bool phi_holds(std::uint32_t n, TuplePair const& x, TuplePair const& y, NormContext const& ctx) {
  if (n < 3) fail(ErrorKind::Range, "phi_n needs n >= 3");
  FSVector const y0 = Term(n, 0)(y.first, y.second);
  for (std::uint32_t m = 0; m <= n; ++m) {
    auto const v = norm_in(ctx, Term(n, m)(x.first, x.second) - y0);
    if (v < 2 * m + 1 || v > 2 * m + 2) return false;
  }
  for (std::uint32_t l = 0; l < n; ++l)
    if (norm_in(ctx, Term(n, l + 1)(y.first, y.second) - Term(n, l)(x.first, x.second)) > 2)
      return false;
  return true;
}

}  // namespace soplab::banach
