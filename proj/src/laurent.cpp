#include "lnk/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace lnk {

int LaurentPolynomial::lowest_exponent() const {
  if (is_zero()) fail(errc::zero_polynomial, "lowest_exponent of 0");
  return terms_.begin()->first;
}

int LaurentPolynomial::highest_exponent() const {
  if (is_zero()) fail(errc::zero_polynomial, "highest_exponent of 0");
  return terms_.rbegin()->first;
}

Int LaurentPolynomial::leading_coefficient() const {
  if (is_zero()) fail(errc::zero_polynomial, "leading_coefficient of 0");
  return terms_.rbegin()->second;
}

Int LaurentPolynomial::trailing_coefficient() const {
  if (is_zero()) fail(errc::zero_polynomial, "trailing_coefficient of 0");
  return terms_.begin()->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::reversed() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Int LaurentPolynomial::evaluate_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Int LaurentPolynomial::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return g;
}

namespace {

// Dense ascending coefficient vector of the polynomial part (lowest
// exponent shifted to 0); degree = size - 1.
std::vector<Int> to_dense(const LaurentPolynomial& f) {
  std::vector<Int> v(static_cast<std::size_t>(f.highest_exponent() -
                                              f.lowest_exponent()) +
                     1);
  int lo = f.lowest_exponent();
  for (const auto& [e, c] : f.terms()) v[static_cast<std::size_t>(e - lo)] = c;
  return v;
}

LaurentPolynomial from_dense(const std::vector<Int>& v, int shift = 0) {
  LaurentPolynomial r;
  for (std::size_t i = 0; i < v.size(); ++i)
    r.add_term(static_cast<int>(i) + shift, v[i]);
  return r;
}

void trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b).
std::vector<Int> pseudo_remainder(std::vector<Int> a, const std::vector<Int>& b) {
  const Int lead = b.back();
  while (a.size() >= b.size()) {
    Int top = a.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= top * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Int dense_content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& c : v) g = gcd(g, c);
  return g;
}

void divide_by_content(std::vector<Int>& v) {
  Int g = dense_content(v);
  if (g > 1)
    for (Int& c : v) c /= g;
}

}  // namespace

LaurentPolynomial gcd(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  auto normalize = [](const LaurentPolynomial& p) {
    LaurentPolynomial q = p.shifted(-p.lowest_exponent());
    return q.leading_coefficient() > 0 ? q : -q;
  };
  if (f.is_zero() && g.is_zero()) return LaurentPolynomial();
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);

  Int content = gcd(f.content(), g.content());
  // Primitive PRS on the primitive polynomial parts.
  std::vector<Int> a = to_dense(f), b = to_dense(g);
  divide_by_content(a);
  divide_by_content(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<Int> r = pseudo_remainder(a, b);
    divide_by_content(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.back() < 0)
    for (Int& c : a) c = -c;
  LaurentPolynomial result = from_dense(a);
  return LaurentPolynomial(content) * result;
}

LaurentPolynomial LaurentPolynomial::divided_exactly_by(
    const LaurentPolynomial& d) const {
  if (d.is_zero()) fail(errc::division_by_zero, "Laurent division by 0");
  if (is_zero()) return LaurentPolynomial();
  std::vector<Int> a = to_dense(*this), b = to_dense(d);
  int shift = lowest_exponent() - d.lowest_exponent();
  if (a.size() < b.size())
    fail(errc::division_by_zero, "inexact Laurent division");
  std::vector<Int> q(a.size() - b.size() + 1);
  // Descending long division; every coefficient step must divide exactly.
  for (std::size_t k = q.size(); k-- > 0;) {
    Int top = a[k + b.size() - 1];
    if (top == 0) continue;
    if (top % b.back() != 0)
      fail(errc::division_by_zero, "inexact Laurent division");
    q[k] = top / b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  for (const Int& c : a)
    if (c != 0) fail(errc::division_by_zero, "inexact Laurent division");
  return from_dense(q, shift);
}

LaurentPolynomial canonical_unit(const LaurentPolynomial& f) {
  if (f.is_zero()) fail(errc::zero_polynomial, "canonical_unit of 0");
  LaurentPolynomial g = f.shifted(-f.lowest_exponent());
  Int at_one = g.evaluate_at_one();
  if (at_one < 0) return -g;
  if (at_one == 0 && g.trailing_coefficient() < 0) return -g;
  return g;
}

bool equal_up_to_unit(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() == g.is_zero();
  return canonical_unit(f) == canonical_unit(g);
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Int a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

struct LaurentParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit LaurentParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void bad() {
    fail(errc::schema_error, "malformed polynomial '" + s + "'");
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits) bad();
    return Int(s.substr(start, pos - start));
  }

  // term := INT ['*' tpart] | tpart ; tpart := 't' ['^' INT]
  LaurentPolynomial term() {
    skip_ws();
    Int coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = integer();
      have_coeff = true;
      if (!eat('*')) return LaurentPolynomial(coeff);
    }
    if (!eat('t')) {
      if (have_coeff) bad();
      bad();
    }
    int exp = 1;
    if (eat('^')) exp = static_cast<int>(integer());
    return LaurentPolynomial::monomial(coeff, exp);
  }

  LaurentPolynomial parse() {
    LaurentPolynomial acc;
    bool negative = eat('-');
    acc += negative ? -term() : term();
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        bad();
    }
    return acc;
  }
};

}  // namespace

LaurentPolynomial parse_laurent(const std::string& text) {
  LaurentParser p(text);
  return p.parse();
}

}  // namespace lnk
