// ---------------------------------------------------------------------------
// rational.cpp -- helpers around GMP rationals.
// ---------------------------------------------------------------------------
#include "oadiff/rational.hpp"

#include <cctype>

#include "oadiff/errors.hpp"

namespace oadiff {

Rational rat(long num, long den) {
  if (den == 0) fail("BadRational", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail("BadRational", "empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational{Integer(text)};
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) fail("BadRational", "zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail("BadRational", "malformed rational literal '" + text + "'");
  }
}

std::string rational_str(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer floor_of(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  return q;
}

Integer ceil_of(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

}  // namespace oadiff
