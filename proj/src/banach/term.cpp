#include "soplab/banach/term.hpp"

#include <cstdlib>
#include <string>

#include "soplab/error.hpp"

namespace soplab::banach {

using qlinalg::a_;
using qlinalg::b_;

Term::Term(std::uint32_t n, std::uint32_t ell) : n_(n), ell_(ell) {}

FSVector Term::operator()(FSVector const& x, FSVector const& y) const {
  return Rational(x_coeff()) * x + Rational(y_coeff()) * y;
}

TuplePair chain_pair(std::uint32_t alpha) {
  return {FSVector::unit(a_(alpha)), FSVector::unit(b_(alpha))};
}

Rational WitnessVector::threshold_abs(std::uint32_t gamma) const {
  Term const t(n, ell);
  return Rational(alpha < gamma ? std::labs(t.x_coeff()) : std::labs(t.y_coeff()));
}

WitnessVector witness_c(std::uint32_t n, std::uint32_t ell, std::uint32_t alpha) {
  if (n < 3) fail(ErrorKind::Range, "witness needs n >= 3, got " + std::to_string(n));
  if (ell > n)
    fail(ErrorKind::Range,
         "witness needs ell <= n, got ell=" + std::to_string(ell) + " n=" + std::to_string(n));
  Term const t(n, ell);
  return {n, ell, alpha, t(FSVector::unit(a_(alpha)), FSVector::unit(b_(alpha)))};
}

}  // namespace soplab::banach
