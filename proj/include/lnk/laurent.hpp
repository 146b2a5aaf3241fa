#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "lnk/numbers.hpp"

namespace lnk {

// Element of Z[t, t^-1], stored as a sparse exponent -> coefficient map
// with no zero coefficients; the empty map is 0.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const Int& constant) {
    if (constant != 0) terms_[0] = constant;
  }
  LaurentPolynomial(int constant) : LaurentPolynomial(Int(constant)) {}
  LaurentPolynomial(std::initializer_list<std::pair<int, Int>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPolynomial monomial(const Int& coeff, int exp) {
    LaurentPolynomial p;
    p.add_term(exp, coeff);
    return p;
  }
  static LaurentPolynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  // A unit of Z[t, t^-1] is +-t^k.
  bool is_unit() const {
    return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
  }

  const std::map<int, Int>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int lowest_exponent() const;   // requires nonzero
  int highest_exponent() const;  // requires nonzero
  Int coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }
  Int constant_value() const { return coefficient(0); }  // requires is_constant
  Int leading_coefficient() const;                       // requires nonzero
  Int trailing_coefficient() const;                      // requires nonzero

  void add_term(int exp, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);

  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);

  bool operator==(const LaurentPolynomial&) const = default;

  LaurentPolynomial shifted(int k) const;  // multiply by t^k
  LaurentPolynomial reversed() const;      // substitute t -> t^-1
  Int evaluate_at_one() const;
  Int content() const;  // gcd of coefficients, nonnegative; 0 for the zero poly

  // Exact division in Z[t, t^-1]; the divisor must divide exactly.
  LaurentPolynomial divided_exactly_by(const LaurentPolynomial& d) const;

 private:
  std::map<int, Int> terms_;
};

// gcd in Z[t] of the polynomial parts (t-power content of the inputs is
// ignored): lowest exponent 0, positive leading coefficient; includes the
// integer content. gcd(0, g) = normalized g.
LaurentPolynomial gcd(const LaurentPolynomial& f, const LaurentPolynomial& g);

// The unit-normal form +-t^k * f: lowest exponent 0 and positive value at
// t = 1 (positive trailing coefficient when the value at 1 vanishes).
// Two Laurent polynomials are unit-equal iff their normal forms coincide.
LaurentPolynomial canonical_unit(const LaurentPolynomial& f);

// f == +-t^k * g for some k; two zeros compare equal.
bool equal_up_to_unit(const LaurentPolynomial& f, const LaurentPolynomial& g);

std::string to_string(const LaurentPolynomial& f);
LaurentPolynomial parse_laurent(const std::string& text);

}  // namespace lnk
