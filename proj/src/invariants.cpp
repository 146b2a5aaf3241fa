#include "lnk/invariants.hpp"

#include "lnk/signature.hpp"

namespace lnk {

LaurentPolynomial alexander(const Matrix<Int>& m) {
  if (!m.is_square()) fail(errc::not_square, "Seifert matrix must be square");
  if (m.rows() == 0) return LaurentPolynomial(1);
  LaurentPolynomial d = det(seifert_t_matrix(m));
  if (d.is_zero())
    fail(errc::invariant_violation, "det(tM - M^T) = 0: not a Seifert matrix");
  return canonical_unit(d);
}

LaurentPolynomial conway(const Matrix<Int>& m) {
  if (!m.is_square()) fail(errc::not_square, "Seifert matrix must be square");
  if (m.rows() == 0) return LaurentPolynomial(1);
  const std::size_t n = m.rows();
  Matrix<LaurentPolynomial> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = LaurentPolynomial::monomial(m(i, j), -1);
      g(i, j) -= LaurentPolynomial::monomial(m(j, i), 1);
    }
  LaurentPolynomial omega_poly = det(g);
  // Rewrite in the basis of powers of z = t - t^-1, highest degree first.
  LaurentPolynomial z{{1, 1}, {-1, -1}};
  LaurentPolynomial nabla;
  while (!omega_poly.is_zero() && omega_poly.highest_exponent() > 0) {
    int d = omega_poly.highest_exponent();
    Int c = omega_poly.leading_coefficient();
    nabla.add_term(d, c);
    LaurentPolynomial zd(1);
    for (int k = 0; k < d; ++k) zd *= z;
    omega_poly -= LaurentPolynomial(c) * zd;
  }
  if (!omega_poly.is_constant())
    fail(errc::basis_conversion_failure,
         "det(t^-1 M - t M^T) is not a polynomial in t - t^-1: invalid "
         "Seifert matrix");
  nabla += omega_poly;
  return nabla;
}

long tristram_levine(const Matrix<Int>& m, const RootOfUnity& omega,
                     int precision_bits, int precision_cap) {
  if (!m.is_square()) fail(errc::not_square, "Seifert matrix must be square");
  if (m.rows() == 0) return 0;
  if (vanishes_at(alexander(m), omega))
    fail(errc::omega_is_alexander_root,
         "omega is a root of the Alexander polynomial");
  SignatureTriple sig =
      hermitian_signature_at_omega(m, omega, precision_bits, precision_cap);
  return sig.signature();
}

long goeritz_signature(const GoeritzData& data) {
  if (!data.euler_number)
    fail(errc::missing_euler_number,
         "the normal Euler number e(F) is required for the signature");
  if (*data.euler_number % 2 != 0)
    fail(errc::invariant_violation, "normal Euler number must be even");
  long sign = 0;
  if (data.matrix.rows() > 0) {
    if (det(data.matrix) == 0)
      fail(errc::singular_matrix, "singular Goeritz matrix");
    sign = symmetric_signature(convert_matrix<Rational>(data.matrix)).signature();
  }
  return sign + (*data.euler_number / 2).convert_to<long>();
}

void CrossingChangeSpec::validate(std::size_t matrix_size) const {
  if (n == 0) fail(errc::invalid_spec, "1/0-surgery is the trivial filling");
  if (epsilon != 1 && epsilon != -1)
    fail(errc::invalid_spec, "epsilon must be +1 or -1");
  if (disk_link < 0) fail(errc::invalid_spec, "disk_link must be nonnegative");
  if (v.size() != matrix_size)
    fail(errc::dimension_mismatch, "disk linking vector length " +
                                       std::to_string(v.size()) +
                                       ", expected " +
                                       std::to_string(matrix_size));
}

Matrix<Int> crossing_change_seifert(const Matrix<Int>& m,
                                    const CrossingChangeSpec& spec) {
  if (!m.is_square()) fail(errc::not_square, "Seifert matrix must be square");
  spec.validate(m.rows());
  if (spec.disk_link != 0)
    fail(errc::invalid_spec,
         "the oriented construction requires lk(dD, K) = 0");
  const std::size_t n = m.rows();
  Matrix<Int> out(n + 2, n + 2);
  out(0, 1) = 1;
  out(1, 1) = -spec.n;
  for (std::size_t j = 0; j < n; ++j) out(0, 2 + j) = spec.epsilon * spec.v[j];
  out.set_block(2, 2, m);
  return out;
}

namespace {

// lambda(dD)(t) = v (tM - M^T)^{-1} v^T.
RationalFunction disk_lambda_t(const Matrix<Int>& m,
                               const std::vector<Int>& v) {
  const std::size_t n = m.rows();
  if (n == 0) return RationalFunction();
  Matrix<LaurentPolynomial> g = seifert_t_matrix(m);
  std::vector<LaurentPolynomial> lv(n);
  for (std::size_t k = 0; k < n; ++k) lv[k] = LaurentPolynomial(v[k]);
  return inverse_bilinear(lv, g, lv);
}

SeifertData disk_data(const Matrix<Int>& m, const std::vector<Int>& v) {
  SeifertData data;
  data.matrix = m;
  data.components["D"] = v;
  return data;
}

}  // namespace

LaurentPolynomial crossing_change_alexander(const Matrix<Int>& m,
                                            const CrossingChangeSpec& spec) {
  if (!m.is_square()) fail(errc::not_square, "Seifert matrix must be square");
  spec.validate(m.rows());
  if (spec.disk_link != 0)
    fail(errc::invalid_spec,
         "the oriented construction requires lk(dD, K) = 0");
  RationalFunction lambda = disk_lambda_t(m, spec.v);
  LaurentPolynomial n_t_minus_1{{0, -spec.n}, {1, spec.n}};  // n(t-1)
  RationalFunction factor =
      RationalFunction(LaurentPolynomial(1)) -
      RationalFunction(n_t_minus_1) * lambda;
  RationalFunction result = factor * RationalFunction(alexander(m));
  if (!result.is_polynomial())
    fail(errc::invariant_violation,
         "crossing-change Alexander value is not a Laurent polynomial");
  return canonical_unit(result.num());
}

namespace {

// Certified comparison of tau = n(1-omega)(1-conj(omega)) lambda(dD;omega)
// against 1; +1 for tau > 1, -1 for tau < 1.
std::optional<int> compare_test_value(const SeifertData& data,
                                      const CrossingChangeSpec& spec,
                                      const RootOfUnity& omega,
                                      mpfr_prec_t prec) {
  auto lam = seifert_lambda_omega_at(data, "D", "D", omega, prec);
  if (!lam) return std::nullopt;
  ComplexBall w = ComplexBall::root_of_unity(omega, prec);
  ComplexBall one = ComplexBall::from_int(1, prec);
  Ball factor = (one - w).norm();  // (1-omega)(1-conj(omega)) = |1-omega|^2
  Ball tau = Ball::from_int(spec.n, prec) * factor * lam->real();
  if (tau.certainly_greater_than(Rational(1))) return 1;
  if (tau.certainly_less_than(Rational(1))) return -1;
  return std::nullopt;
}

}  // namespace

long crossing_change_signature(const Matrix<Int>& m,
                               const CrossingChangeSpec& spec,
                               const RootOfUnity& omega, int precision_bits,
                               int precision_cap) {
  spec.validate(m.rows());
  if (spec.disk_link != 0)
    fail(errc::invalid_spec,
         "the oriented construction requires lk(dD, K) = 0");
  long base = tristram_levine(m, omega, precision_bits, precision_cap);
  if (m.rows() == 0 || spec.v == std::vector<Int>(m.rows(), Int(0)))
    return base;  // lambda = 0, test value 0 < 1
  SeifertData data = disk_data(m, spec.v);
  if (vanishes_at(alexander(m), omega))
    fail(errc::omega_is_alexander_root,
         "omega is a root of the Alexander polynomial");
  int cmp = escalate(precision_bits, precision_cap,
                     [&](mpfr_prec_t prec) -> std::optional<int> {
                       return compare_test_value(data, spec, omega, prec);
                     });
  return cmp > 0 ? base - 2 * (spec.n > 0 ? 1 : -1) : base;
}

Ball conway_at_imaginary(const LaurentPolynomial& nabla, const Ball& s) {
  // (i s)^{2k} = (-1)^k s^{2k}; odd powers would be imaginary and do not
  // occur for knots.
  Ball acc(s.precision());
  Ball s2 = s * s;
  if (nabla.is_zero()) return acc;
  for (const auto& [e, c] : nabla.terms()) {
    if (e < 0 || e % 2 != 0)
      fail(errc::basis_conversion_failure,
           "Conway polynomial of a knot must have even nonnegative powers");
  }
  int top = nabla.highest_exponent();
  for (int e = top; e >= 0; e -= 2) {
    acc = acc * s2;
    Int c = nabla.coefficient(e);
    if (e % 4 != 0) c = -c;  // the (-1)^k sign
    if (c != 0) acc = acc + Ball::from_int(c, s.precision());
  }
  return acc;
}

Ball one_minus_omega_abs(const RootOfUnity& omega, mpfr_prec_t prec) {
  Rational half_turns(omega.angle_numerator());
  half_turns /= omega.angle_denominator();
  Ball angle = Ball::pi(prec) * Ball::from_rational(half_turns, prec);
  return Ball::from_int(2, prec) * Ball::sin_of(angle);
}

std::pair<ComplexApprox, ComplexApprox> conway_ratio_identity(
    const Matrix<Int>& m, const CrossingChangeSpec& spec,
    const RootOfUnity& omega, int precision_bits, int precision_cap) {
  spec.validate(m.rows());
  if (spec.disk_link != 0)
    fail(errc::invalid_spec,
         "the oriented construction requires lk(dD, K) = 0");
  if (m.rows() > 0 && vanishes_at(alexander(m), omega))
    fail(errc::omega_is_alexander_root,
         "omega is a root of the Alexander polynomial");
  LaurentPolynomial nabla_k = conway(m);
  LaurentPolynomial nabla_kn = conway(crossing_change_seifert(m, spec));
  SeifertData data = disk_data(m, spec.v);

  using Pair = std::pair<ComplexApprox, ComplexApprox>;
  return escalate(
      precision_bits, precision_cap,
      [&](mpfr_prec_t prec) -> std::optional<Pair> {
        std::optional<ComplexBall> lam;
        if (m.rows() == 0)
          lam = ComplexBall(prec);
        else
          lam = seifert_lambda_omega_at(data, "D", "D", omega, prec);
        if (!lam) return std::nullopt;
        ComplexBall w = ComplexBall::root_of_unity(omega, prec);
        ComplexBall one = ComplexBall::from_int(1, prec);
        Ball factor = (one - w).norm();
        ComplexBall lhs =
            lam->scaled(Ball::from_int(spec.n, prec) * factor);
        Ball s = one_minus_omega_abs(omega, prec);
        Ball num = conway_at_imaginary(nabla_kn, s);
        Ball den = conway_at_imaginary(nabla_k, s);
        auto inv_den = den.try_recip();
        if (!inv_den) return std::nullopt;
        Ball rhs = Ball::from_int(1, prec) - num * *inv_den;
        return Pair{lhs, ComplexBall(rhs, Ball(prec))};
      });
}

long crossing_change_signature_unoriented(const GoeritzData& data,
                                          const CrossingChangeSpec& spec) {
  spec.validate(data.matrix.rows());
  long base = goeritz_signature(data);  // sign(G) + e(F)/2
  GoeritzData disk = data;
  disk.components.clear();
  disk.components["D"] = spec.v;
  Rational lambda = goeritz_lambda(disk, "D", "D");
  Rational two_n_lambda = Rational(2 * spec.n) * lambda;
  if (two_n_lambda == 1)
    fail(errc::invalid_spec,
         "2n lambda(dD) = 1: the input does not describe a crossing-change "
         "surgery");
  // diag(1/2n - lambda, -2n) contributes sign(1 - 2n lambda) sign(n) - sign(n).
  long sn = spec.n > 0 ? 1 : -1;
  long diag = (two_n_lambda < 1 ? sn : -sn) - sn;
  return base + diag + (spec.n * spec.disk_link).convert_to<long>();
}

}  // namespace lnk
