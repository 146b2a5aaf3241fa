#include "lnk/ball.hpp"

#include <cstdio>

namespace lnk {

namespace {
constexpr mpfr_prec_t kRadiusPrec = 64;
}

std::string Real::str(int digits) const {
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Rg", digits, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Ball::Ball(mpfr_prec_t prec) : c_(prec), r_(kRadiusPrec) {}

void Ball::add_to_radius(const Real& extra) {
  mpfr_add(r_.raw(), r_.raw(), extra.raw(), MPFR_RNDU);
}

// Account for the rounding of the last center operation: at precision p a
// rounded regular result x is within 2^(exp(x) - p) of the exact value.
void Ball::bump_rounding(int ternary) {
  if (ternary == 0) return;
  if (mpfr_nan_p(c_.raw()) || mpfr_inf_p(c_.raw()))
    fail(errc::numerically_uncertain, "non-finite value in ball arithmetic");
  Real ulp(kRadiusPrec);
  if (mpfr_zero_p(c_.raw())) {
    mpfr_set_ui_2exp(ulp.raw(), 1, mpfr_get_emin(), MPFR_RNDU);
  } else {
    mpfr_set_ui_2exp(ulp.raw(), 1, mpfr_get_exp(c_.raw()) - c_.precision(),
                     MPFR_RNDU);
  }
  add_to_radius(ulp);
}

Ball Ball::from_int(const Int& x, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_z(b.c_.raw(), x.backend().data(), MPFR_RNDN);
  b.bump_rounding(t);
  return b;
}

Ball Ball::from_rational(const Rational& x, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_q(b.c_.raw(), x.backend().data(), MPFR_RNDN);
  b.bump_rounding(t);
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_const_pi(b.c_.raw(), MPFR_RNDN);
  b.bump_rounding(t);
  return b;
}

bool Ball::contains_zero() const {
  Real a(c_.precision());
  mpfr_abs(a.raw(), c_.raw(), MPFR_RNDN);  // exact
  return mpfr_cmp(a.raw(), r_.raw()) <= 0;
}

int Ball::certified_sign() const {
  if (contains_zero()) return 0;
  return mpfr_sgn(c_.raw()) > 0 ? 1 : -1;
}

bool Ball::definitely_contains(const Rational& q) const {
  Real lo(c_.precision()), hi(c_.precision());
  mpfr_sub_q(lo.raw(), c_.raw(), q.backend().data(), MPFR_RNDD);
  mpfr_sub_q(hi.raw(), c_.raw(), q.backend().data(), MPFR_RNDU);
  mpfr_abs(lo.raw(), lo.raw(), MPFR_RNDN);
  mpfr_abs(hi.raw(), hi.raw(), MPFR_RNDN);
  Real worst = mpfr_cmp(lo.raw(), hi.raw()) >= 0 ? lo : hi;
  return mpfr_cmp(worst.raw(), r_.raw()) <= 0;
}

bool Ball::certainly_greater_than(const Rational& q) const {
  Real lo(c_.precision());
  mpfr_sub(lo.raw(), c_.raw(), r_.raw(), MPFR_RNDD);
  return mpfr_cmp_q(lo.raw(), q.backend().data()) > 0;
}

bool Ball::certainly_less_than(const Rational& q) const {
  Real hi(c_.precision());
  mpfr_add(hi.raw(), c_.raw(), r_.raw(), MPFR_RNDU);
  return mpfr_cmp_q(hi.raw(), q.backend().data()) < 0;
}

bool Ball::radius_at_most(double bound) const {
  return mpfr_cmp_d(r_.raw(), bound) <= 0;
}

Ball Ball::operator-() const {
  Ball b(*this);
  mpfr_neg(b.c_.raw(), b.c_.raw(), MPFR_RNDN);  // exact
  return b;
}

Ball Ball::abs() const {
  Ball b(*this);
  mpfr_abs(b.c_.raw(), b.c_.raw(), MPFR_RNDN);  // exact
  return b;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  int t = mpfr_add(out.c_.raw(), a.c_.raw(), b.c_.raw(), MPFR_RNDN);
  mpfr_add(out.r_.raw(), a.r_.raw(), b.r_.raw(), MPFR_RNDU);
  out.bump_rounding(t);
  return out;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  int t = mpfr_sub(out.c_.raw(), a.c_.raw(), b.c_.raw(), MPFR_RNDN);
  mpfr_add(out.r_.raw(), a.r_.raw(), b.r_.raw(), MPFR_RNDU);
  out.bump_rounding(t);
  return out;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  int t = mpfr_mul(out.c_.raw(), a.c_.raw(), b.c_.raw(), MPFR_RNDN);
  // |ab - a0 b0| <= |a0| rb + |b0| ra + ra rb
  Real term(kRadiusPrec), acc(kRadiusPrec), mag(kRadiusPrec);
  mpfr_abs(mag.raw(), a.c_.raw(), MPFR_RNDU);
  mpfr_mul(term.raw(), mag.raw(), b.r_.raw(), MPFR_RNDU);
  mpfr_set(acc.raw(), term.raw(), MPFR_RNDU);
  mpfr_abs(mag.raw(), b.c_.raw(), MPFR_RNDU);
  mpfr_mul(term.raw(), mag.raw(), a.r_.raw(), MPFR_RNDU);
  mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDU);
  mpfr_mul(term.raw(), a.r_.raw(), b.r_.raw(), MPFR_RNDU);
  mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDU);
  mpfr_set(out.r_.raw(), acc.raw(), MPFR_RNDU);
  out.bump_rounding(t);
  return out;
}

std::optional<Ball> Ball::try_recip() const {
  // need |c| - r > 0, certified from below
  Real lo(kRadiusPrec), mag(kRadiusPrec);
  mpfr_abs(mag.raw(), c_.raw(), MPFR_RNDD);
  mpfr_sub(lo.raw(), mag.raw(), r_.raw(), MPFR_RNDD);
  if (mpfr_sgn(lo.raw()) <= 0) return std::nullopt;
  Ball out(precision());
  int t = mpfr_ui_div(out.c_.raw(), 1, c_.raw(), MPFR_RNDN);
  // |1/x - 1/c| <= r / (|c| (|c| - r))
  Real denom(kRadiusPrec);
  mpfr_abs(denom.raw(), c_.raw(), MPFR_RNDD);
  mpfr_mul(denom.raw(), denom.raw(), lo.raw(), MPFR_RNDD);
  mpfr_div(out.r_.raw(), r_.raw(), denom.raw(), MPFR_RNDU);
  out.bump_rounding(t);
  return out;
}

Ball Ball::recip() const {
  auto r = try_recip();
  if (!r) fail(errc::numerically_uncertain, "reciprocal of a ball containing 0");
  return *r;
}

Ball Ball::cos_of(const Ball& x) {
  Ball out(x.precision());
  int t = mpfr_cos(out.c_.raw(), x.c_.raw(), MPFR_RNDN);
  mpfr_set(out.r_.raw(), x.r_.raw(), MPFR_RNDU);  // cos is 1-Lipschitz
  out.bump_rounding(t);
  return out;
}

Ball Ball::sin_of(const Ball& x) {
  Ball out(x.precision());
  int t = mpfr_sin(out.c_.raw(), x.c_.raw(), MPFR_RNDN);
  mpfr_set(out.r_.raw(), x.r_.raw(), MPFR_RNDU);
  out.bump_rounding(t);
  return out;
}

std::string Ball::str(int digits) const {
  return c_.str(digits) + " +- " + r_.str(3);
}

bool consistent(const Ball& a, const Ball& b) { return (a - b).contains_zero(); }

Real ComplexBall::error_radius() const {
  Real r(kRadiusPrec);
  mpfr_add(r.raw(), re_.radius().raw(), im_.radius().raw(), MPFR_RNDU);
  return r;
}

bool ComplexBall::radius_at_most(double bound) const {
  return mpfr_cmp_d(error_radius().raw(), bound) <= 0;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ * b.re_ - a.im_ * b.im_,
                     a.re_ * b.im_ + a.im_ * b.re_);
}

std::optional<ComplexBall> ComplexBall::try_recip() const {
  Ball n = norm();
  auto inv_n = n.try_recip();
  if (!inv_n || n.certified_sign() <= 0) return std::nullopt;
  return conj().scaled(*inv_n);
}

ComplexBall ComplexBall::pow(long e) const {
  if (e < 0) {
    auto inv = try_recip();
    if (!inv)
      fail(errc::numerically_uncertain, "negative power of a ball containing 0");
    return inv->pow(-e);
  }
  ComplexBall acc = ComplexBall::from_int(1, precision());
  ComplexBall base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

std::optional<ComplexBall> try_divide(const ComplexBall& a, const ComplexBall& b) {
  auto inv = b.try_recip();
  if (!inv) return std::nullopt;
  return a * *inv;
}

bool consistent(const ComplexBall& a, const ComplexBall& b) {
  return (a - b).contains_zero();
}

ComplexBall ComplexBall::root_of_unity(const RootOfUnity& w, mpfr_prec_t prec) {
  const Int &a = w.angle_numerator(), &q = w.angle_denominator();
  // Exact points of the unit circle stay exact.
  if (q == 2) return ComplexBall(Ball::from_int(-1, prec), Ball(prec));
  if (q == 4 && a == 1) return ComplexBall(Ball(prec), Ball::from_int(1, prec));
  if (q == 4 && a == 3) return ComplexBall(Ball(prec), Ball::from_int(-1, prec));
  Rational turns(2 * a);
  turns /= q;
  Ball theta = Ball::pi(prec) * Ball::from_rational(turns, prec);
  return ComplexBall(Ball::cos_of(theta), Ball::sin_of(theta));
}

std::string ComplexBall::str(int digits) const {
  return re_.center().str(digits) + " + " + im_.center().str(digits) +
         "*i +- " + error_radius().str(3);
}

ComplexBall eval_at_root(const LaurentPolynomial& f, const RootOfUnity& w,
                         mpfr_prec_t prec) {
  if (f.is_zero()) return ComplexBall(prec);
  ComplexBall omega = ComplexBall::root_of_unity(w, prec);
  int lo = f.lowest_exponent(), hi = f.highest_exponent();
  // Horner on the polynomial part, then shift back by omega^lo.
  ComplexBall acc = ComplexBall::from_int(f.coefficient(hi), prec);
  for (int e = hi - 1; e >= lo; --e)
    acc = acc * omega + ComplexBall::from_int(f.coefficient(e), prec);
  if (lo != 0) acc = acc * omega.pow(lo);
  return acc;
}

ComplexApprox eval_root_of_unity(const RationalFunction& f, const RootOfUnity& w,
                                 int precision_bits, int precision_cap) {
  if (vanishes_at(f.den(), w))
    fail(errc::denominator_vanishes,
         "denominator vanishes at omega = exp(2*pi*i*" + to_string(w) + ")");
  int p = precision_bits < kMinPrecision ? kMinPrecision : precision_bits;
  if (precision_cap < p) precision_cap = p;
  while (true) {
    ComplexBall num = eval_at_root(f.num(), w, p);
    ComplexBall den = eval_at_root(f.den(), w, p);
    if (auto q = try_divide(num, den)) return *q;
    if (p >= precision_cap) break;
    p = p * 2 < precision_cap ? p * 2 : precision_cap;
  }
  fail(errc::denominator_vanishes,
       "cannot separate the denominator from zero at the precision cap");
}

std::optional<Int> certified_integer_abs_product(
    const std::vector<ComplexBall>& factors) {
  // Directed [lo, hi] interval product of the moduli.
  Real lo(kRadiusPrec), hi(kRadiusPrec);
  mpfr_set_ui(lo.raw(), 1, MPFR_RNDD);
  mpfr_set_ui(hi.raw(), 1, MPFR_RNDU);
  Real t(kRadiusPrec);
  for (const ComplexBall& z : factors) {
    auto bound = [&](const Ball& b, mpfr_rnd_t rnd, Real& out) {
      mpfr_abs(out.raw(), b.center().raw(), rnd);
      if (rnd == MPFR_RNDU)
        mpfr_add(out.raw(), out.raw(), b.radius().raw(), MPFR_RNDU);
      else {
        mpfr_sub(out.raw(), out.raw(), b.radius().raw(), MPFR_RNDD);
        if (mpfr_sgn(out.raw()) < 0) mpfr_set_zero(out.raw(), 1);
      }
    };
    Real re_lo(kRadiusPrec), re_hi(kRadiusPrec), im_lo(kRadiusPrec),
        im_hi(kRadiusPrec);
    bound(z.real(), MPFR_RNDD, re_lo);
    bound(z.real(), MPFR_RNDU, re_hi);
    bound(z.imaginary(), MPFR_RNDD, im_lo);
    bound(z.imaginary(), MPFR_RNDU, im_hi);
    // |z| in [sqrt(re_lo^2 + im_lo^2), sqrt(re_hi^2 + im_hi^2)]
    Real m_lo(kRadiusPrec), m_hi(kRadiusPrec);
    mpfr_mul(m_lo.raw(), re_lo.raw(), re_lo.raw(), MPFR_RNDD);
    mpfr_mul(t.raw(), im_lo.raw(), im_lo.raw(), MPFR_RNDD);
    mpfr_add(m_lo.raw(), m_lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_sqrt(m_lo.raw(), m_lo.raw(), MPFR_RNDD);
    mpfr_mul(m_hi.raw(), re_hi.raw(), re_hi.raw(), MPFR_RNDU);
    mpfr_mul(t.raw(), im_hi.raw(), im_hi.raw(), MPFR_RNDU);
    mpfr_add(m_hi.raw(), m_hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_sqrt(m_hi.raw(), m_hi.raw(), MPFR_RNDU);
    mpfr_mul(lo.raw(), lo.raw(), m_lo.raw(), MPFR_RNDD);
    mpfr_mul(hi.raw(), hi.raw(), m_hi.raw(), MPFR_RNDU);
  }
  Int n_lo, n_hi;
  mpfr_get_z(n_lo.backend().data(), lo.raw(), MPFR_RNDU);  // ceil(lo)
  mpfr_get_z(n_hi.backend().data(), hi.raw(), MPFR_RNDD);  // floor(hi)
  if (n_lo != n_hi) return std::nullopt;
  return n_lo;
}

}  // namespace lnk
