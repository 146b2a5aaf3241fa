#include "lnk/ratfun.hpp"

namespace lnk {

RationalFunction::RationalFunction(const LaurentPolynomial& numerator,
                                   const LaurentPolynomial& denominator) {
  if (denominator.is_zero())
    fail(errc::division_by_zero, "rational function with denominator 0");
  if (numerator.is_zero()) {
    num_ = LaurentPolynomial();
    den_ = LaurentPolynomial(1);
    return;
  }
  int num_shift = numerator.lowest_exponent();
  int den_shift = denominator.lowest_exponent();
  LaurentPolynomial n = numerator.shifted(-num_shift);
  LaurentPolynomial d = denominator.shifted(-den_shift);
  LaurentPolynomial g = gcd(n, d);
  if (!g.is_one()) {
    n = n.divided_exactly_by(g);
    d = d.divided_exactly_by(g);
  }
  if (d.trailing_coefficient() < 0) {
    n = -n;
    d = -d;
  }
  num_ = n.shifted(num_shift - den_shift);
  den_ = std::move(d);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "rational function division by 0");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of 0");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::reversed() const {
  return RationalFunction(num_.reversed(), den_.reversed());
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

RationalFunction parse_ratfun(const std::string& text) {
  auto split = text.find(")/(");
  if (!text.empty() && text.front() == '(' && split != std::string::npos &&
      text.back() == ')') {
    LaurentPolynomial num = parse_laurent(text.substr(1, split - 1));
    LaurentPolynomial den =
        parse_laurent(text.substr(split + 3, text.size() - split - 4));
    return RationalFunction(num, den);
  }
  return RationalFunction(parse_laurent(text));
}

}  // namespace lnk
