#pragma once

#include <string>

#include "lnk/laurent.hpp"

namespace lnk {

// Element of the quotient field Q(Z[t, t^-1]) in a unique canonical form:
// numerator and denominator coprime in Z[t] (integer content included),
// denominator with lowest exponent 0 and positive trailing coefficient.
// All t-power content sits in the numerator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(LaurentPolynomial numerator)
      : num_(std::move(numerator)), den_(1) {}
  RationalFunction(const LaurentPolynomial& numerator,
                   const LaurentPolynomial& denominator);

  static RationalFunction from_rational(const Rational& q) {
    return RationalFunction(LaurentPolynomial(numerator(q)),
                            LaurentPolynomial(denominator(q)));
  }

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction inverse() const;
  RationalFunction reversed() const;  // substitute t -> t^-1

  bool operator==(const RationalFunction&) const = default;

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

inline RationalFunction ratfun_reduce(const LaurentPolynomial& num,
                                      const LaurentPolynomial& den) {
  return RationalFunction(num, den);
}

std::string to_string(const RationalFunction& f);
RationalFunction parse_ratfun(const std::string& text);

}  // namespace lnk
