#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnk/ratfun.hpp"
#include "lnk/root_of_unity.hpp"

namespace lnk {

inline constexpr int kMinPrecision = 64;
inline constexpr int kDefaultPrecision = 128;
inline constexpr int kDefaultPrecisionCap = 4096;

// RAII wrapper for a single mpfr number.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits) const;

 private:
  mpfr_t v_;
};

// A real ball: center at the working precision, radius an upper bound kept
// at a small fixed precision and always rounded upward. Every operation
// returns a ball that contains the exact result of the operation applied
// to any points of the input balls.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec);
  static Ball from_int(const Int& x, mpfr_prec_t prec);
  static Ball from_rational(const Rational& x, mpfr_prec_t prec);
  static Ball pi(mpfr_prec_t prec);

  const Real& center() const { return c_; }
  const Real& radius() const { return r_; }
  mpfr_prec_t precision() const { return c_.precision(); }

  bool is_exact() const { return r_.is_zero(); }
  bool contains_zero() const;
  int certified_sign() const;  // -1, +1, or 0 when uncertain
  bool definitely_contains(const Rational& q) const;
  bool certainly_greater_than(const Rational& q) const;
  bool certainly_less_than(const Rational& q) const;
  bool radius_at_most(double bound) const;

  Ball operator-() const;
  Ball abs() const;
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  std::optional<Ball> try_recip() const;  // nullopt when 0 not excluded
  Ball recip() const;

  // Rigorous enclosures of cos(x), sin(x) over the whole input ball.
  static Ball cos_of(const Ball& x);
  static Ball sin_of(const Ball& x);

  std::string str(int digits = 20) const;

 private:
  void bump_rounding(int ternary);
  void add_to_radius(const Real& extra);

  Real c_;
  Real r_;
};

// a and b are consistent when they can contain a common value; two sound
// enclosures of the same exact quantity always are.
bool consistent(const Ball& a, const Ball& b);

// Rectangular complex ball: one real ball per component. This is the
// carrier for certified evaluations at roots of unity; the reported
// error_radius bounds the distance to the exact complex value.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec) {}
  ComplexBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}
  static ComplexBall from_int(const Int& x, mpfr_prec_t prec) {
    return ComplexBall(Ball::from_int(x, prec), Ball(prec));
  }
  static ComplexBall from_rational(const Rational& x, mpfr_prec_t prec) {
    return ComplexBall(Ball::from_rational(x, prec), Ball(prec));
  }
  // exp(2*pi*i * a/q) with a certified enclosure (exact at angle 1/2).
  static ComplexBall root_of_unity(const RootOfUnity& w, mpfr_prec_t prec);

  const Ball& real() const { return re_; }
  const Ball& imaginary() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }
  Real error_radius() const;  // upper bound on the distance to the exact value
  bool is_exact() const { return re_.is_exact() && im_.is_exact(); }

  bool contains_zero() const {
    return re_.contains_zero() && im_.contains_zero();
  }
  bool definitely_contains(const Rational& re, const Rational& im) const {
    return re_.definitely_contains(re) && im_.definitely_contains(im);
  }
  bool radius_at_most(double bound) const;

  ComplexBall conj() const { return ComplexBall(re_, -im_); }
  ComplexBall operator-() const { return ComplexBall(-re_, -im_); }
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  ComplexBall scaled(const Ball& s) const {
    return ComplexBall(re_ * s, im_ * s);
  }
  // |z|^2 as a real ball.
  Ball norm() const { return re_ * re_ + im_ * im_; }
  std::optional<ComplexBall> try_recip() const;
  ComplexBall pow(long e) const;  // requires a ball excluding 0 when e < 0

  std::string str(int digits = 20) const;

 private:
  Ball re_;
  Ball im_;
};

std::optional<ComplexBall> try_divide(const ComplexBall& a, const ComplexBall& b);
bool consistent(const ComplexBall& a, const ComplexBall& b);

// The public approximation type handed out by omega-evaluations.
using ComplexApprox = ComplexBall;

// Certified evaluation of a Laurent polynomial at a root of unity.
ComplexBall eval_at_root(const LaurentPolynomial& f, const RootOfUnity& w,
                         mpfr_prec_t prec);

// Certified evaluation of a rational function at a root of unity, with
// automatic precision doubling. Denominators that vanish at omega are
// detected exactly (cyclotomic divisibility) before any numerics run.
ComplexApprox eval_root_of_unity(const RationalFunction& f, const RootOfUnity& w,
                                 int precision_bits,
                                 int precision_cap = kDefaultPrecisionCap);

// Certified |z_1|*...*|z_n| rounded to the unique integer it encloses;
// nullopt when the enclosure does not pin down a single integer.
std::optional<Int> certified_integer_abs_product(
    const std::vector<ComplexBall>& factors);

// Doubling precision escalation: attempt(prec) returns nullopt to request
// more precision; throws NumericallyUncertain past the cap.
template <class F>
auto escalate(int start_bits, int cap, F&& attempt)
    -> typename std::invoke_result_t<F, mpfr_prec_t>::value_type {
  int p = start_bits < kMinPrecision ? kMinPrecision : start_bits;
  if (cap < p) cap = p;
  while (true) {
    if (auto result = attempt(static_cast<mpfr_prec_t>(p))) return *result;
    if (p >= cap) break;
    p = p * 2 < cap ? p * 2 : cap;
  }
  fail(errc::numerically_uncertain,
       "could not certify the result at the precision cap (" +
           std::to_string(cap) + " bits)");
}

}  // namespace lnk
