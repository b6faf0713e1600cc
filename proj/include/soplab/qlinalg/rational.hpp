#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace soplab::qlinalg {

/// Exact rational scalar. GMP keeps results of arithmetic canonical (lowest
/// terms, positive denominator); values built from raw parts go through
/// make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(Integer num, Integer den);

/// Always "p/q", integers included ("3/1"), so the form is lossless and
/// uniform.
std::string to_string(Rational const& q);

/// Accepts "p/q", "p", and optional leading sign. Throws Error(Parse).
Rational parse_rational(std::string_view text);

inline Rational abs(Rational const& q) { return q < 0 ? Rational(-q) : q; }

/// max(|p|, q) for p/q in lowest terms.
Integer height(Rational const& q);

bool is_dyadic(Rational const& q);

}  // namespace soplab::qlinalg
