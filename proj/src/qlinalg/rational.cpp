#include "soplab/qlinalg/rational.hpp"

#include "soplab/error.hpp"

namespace soplab::qlinalg {

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorKind::Domain, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(Integer num, Integer den) {
  if (den == 0) fail(ErrorKind::Domain, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(Rational const& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto const slash = text.find('/');
  auto const num = text.substr(0, slash);
  auto const den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(to_integer(num), d);
}

Integer height(Rational const& q) {
  Integer n = abs(q.get_num());
  return n > q.get_den() ? n : Integer(q.get_den());
}

bool is_dyadic(Rational const& q) {
  Integer d = q.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

}  // namespace soplab::qlinalg
