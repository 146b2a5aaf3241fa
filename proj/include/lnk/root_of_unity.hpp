#pragma once

#include "lnk/laurent.hpp"
#include "lnk/numbers.hpp"

namespace lnk {

// omega = exp(2*pi*i * a/q) as the reduced fraction a/q of a full turn,
// with 0 < a/q < 1 (so omega != 1). After reduction omega is a primitive
// q-th root of unity.
class RootOfUnity {
 public:
  RootOfUnity(Int angle_numerator, Int angle_denominator);

  const Int& angle_numerator() const { return num_; }
  const Int& angle_denominator() const { return den_; }
  const Int& order() const { return den_; }

  RootOfUnity conjugate() const { return RootOfUnity(den_ - num_, den_); }
  bool is_minus_one() const { return num_ == 1 && den_ == 2; }

  bool operator==(const RootOfUnity&) const = default;

 private:
  Int num_;
  Int den_;
};

// The q-th cyclotomic polynomial (monic, in Z[t]).
LaurentPolynomial cyclotomic_polynomial(unsigned long q);

// Exact test for f(omega) = 0, by divisibility of f's polynomial part by
// the cyclotomic polynomial of omega's order. f = 0 vanishes everywhere.
bool vanishes_at(const LaurentPolynomial& f, const RootOfUnity& omega);

std::string to_string(const RootOfUnity& w);
RootOfUnity parse_root_of_unity(const std::string& text);  // "A/B" of a turn

}  // namespace lnk
