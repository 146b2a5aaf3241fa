#include "lnk/root_of_unity.hpp"

#include <map>

namespace lnk {

RootOfUnity::RootOfUnity(Int angle_numerator, Int angle_denominator) {
  if (angle_denominator <= 0)
    fail(errc::invariant_violation, "root of unity needs a positive angle denominator");
  Int g = gcd(abs(angle_numerator), angle_denominator);
  num_ = angle_numerator / g;
  den_ = angle_denominator / g;
  if (num_ <= 0 || num_ >= den_)
    fail(errc::invariant_violation,
         "root-of-unity angle must lie strictly between 0 and 1 (got " +
             num_.str() + "/" + den_.str() + ")");
}

LaurentPolynomial cyclotomic_polynomial(unsigned long q) {
  static std::map<unsigned long, LaurentPolynomial> cache;
  if (q == 0) fail(errc::invalid_spec, "cyclotomic order must be positive");
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  // t^q - 1 divided by the cyclotomic polynomials of the proper divisors.
  LaurentPolynomial poly = LaurentPolynomial::monomial(1, static_cast<int>(q)) -
                           LaurentPolynomial(1);
  for (unsigned long d = 1; d < q; ++d)
    if (q % d == 0) poly = poly.divided_exactly_by(cyclotomic_polynomial(d));
  cache.emplace(q, poly);
  return poly;
}

bool vanishes_at(const LaurentPolynomial& f, const RootOfUnity& omega) {
  if (f.is_zero()) return true;
  const Int& q = omega.order();
  if (q > 1000000)
    fail(errc::invalid_spec, "root-of-unity order too large: " + q.str());
  LaurentPolynomial phi = cyclotomic_polynomial(q.convert_to<unsigned long>());
  LaurentPolynomial p = f.shifted(-f.lowest_exponent());
  if (p.highest_exponent() < phi.highest_exponent()) return false;
  // phi is monic, so remainder-by-division stays in Z[t].
  while (!p.is_zero() && p.highest_exponent() >= phi.highest_exponent()) {
    p -= phi.shifted(p.highest_exponent() - phi.highest_exponent()) *
         LaurentPolynomial(p.leading_coefficient());
  }
  return p.is_zero();
}

std::string to_string(const RootOfUnity& w) {
  return w.angle_numerator().str() + "/" + w.angle_denominator().str();
}

RootOfUnity parse_root_of_unity(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    fail(errc::schema_error, "omega must be a fraction A/B of a full turn");
  try {
    return RootOfUnity(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail(errc::schema_error, "malformed omega '" + text + "'");
  }
}

}  // namespace lnk
