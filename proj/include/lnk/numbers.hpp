#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "lnk/errors.hpp"

namespace lnk {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

inline int sign_of(const Int& a) { return a.sign(); }
inline int sign_of(const Rational& a) { return a.sign(); }

// Floor division, exact for any sign of a (b must be nonzero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// "p/q", or just "p" when the denominator is 1; sign on the numerator.
inline std::string to_string(const Rational& r) {
  Int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(errc::schema_error, "malformed rational '" + text + "'");
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) return bad();
    Rational r(num);
    r /= den;  // canonicalizes
    return r;
  } catch (const std::runtime_error&) {
    return bad();
  }
}

}  // namespace lnk
