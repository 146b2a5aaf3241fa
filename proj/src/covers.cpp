#include "lnk/covers.hpp"

#include "lnk/invariants.hpp"

namespace lnk {

namespace {

template <class D>
const std::vector<Int>& lookup_vector(const D& data, const std::string& label) {
  auto it = data.components.find(label);
  if (it == data.components.end())
    fail(errc::invalid_spec, "unknown component '" + label + "'");
  return it->second;
}

template <class D>
Rational lookup_ambient(const D& data, const std::string& i,
                        const std::string& j) {
  auto it = data.ambient_lk.find(ordered_pair(i, j));
  if (it == data.ambient_lk.end())
    fail(errc::missing_ambient_lk, "ambient linking number for (" + i + ", " +
                                       j + ") not provided");
  return it->second;
}

std::vector<std::string> vector_length_violations(
    const std::map<std::string, std::vector<Int>>& components, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& [name, v] : components)
    if (v.size() != n)
      out.push_back("component '" + name + "' has vector length " +
                    std::to_string(v.size()) + ", expected " +
                    std::to_string(n));
  return out;
}

[[noreturn]] void report(const std::vector<std::string>& violations) {
  std::string msg;
  for (const auto& v : violations) {
    if (!msg.empty()) msg += "; ";
    msg += v;
  }
  fail(errc::invariant_violation, msg);
}

}  // namespace

const std::vector<Int>& GoeritzData::component_vector(
    const std::string& label) const {
  return lookup_vector(*this, label);
}
Rational GoeritzData::ambient(const std::string& i, const std::string& j) const {
  return lookup_ambient(*this, i, j);
}
const std::vector<Int>& SeifertData::component_vector(
    const std::string& label) const {
  return lookup_vector(*this, label);
}
Rational SeifertData::ambient(const std::string& i, const std::string& j) const {
  return lookup_ambient(*this, i, j);
}

void validate_goeritz(const GoeritzData& data) {
  std::vector<std::string> violations;
  if (!data.matrix.is_square())
    violations.push_back("Goeritz matrix is not square");
  else
    for (std::size_t i = 0; i < data.matrix.rows(); ++i)
      for (std::size_t j = i + 1; j < data.matrix.cols(); ++j)
        if (data.matrix(i, j) != data.matrix(j, i))
          violations.push_back("matrix not symmetric at (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
  if (data.euler_number && *data.euler_number % 2 != 0)
    violations.push_back("normal Euler number must be even");
  auto lengths = vector_length_violations(data.components, data.matrix.rows());
  violations.insert(violations.end(), lengths.begin(), lengths.end());
  if (!violations.empty()) report(violations);
}

void validate_seifert(const SeifertData& data) {
  std::vector<std::string> violations;
  if (!data.matrix.is_square())
    violations.push_back("Seifert matrix is not square");
  else {
    Matrix<Int> skew = data.matrix - data.matrix.transpose();
    if (abs(det(skew)) != 1) violations.push_back("M - M^T singular");
  }
  auto lengths = vector_length_violations(data.components, data.matrix.rows());
  violations.insert(violations.end(), lengths.begin(), lengths.end());
  if (!violations.empty()) report(violations);
}

Matrix<LaurentPolynomial> seifert_t_matrix(const Matrix<Int>& m) {
  Matrix<LaurentPolynomial> g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      g(i, j) = LaurentPolynomial::monomial(m(i, j), 1);
      g(i, j) -= LaurentPolynomial(m(j, i));
    }
  return g;
}

Rational goeritz_lambda(const GoeritzData& data, const std::string& i,
                        const std::string& j) {
  const std::vector<Int>& vi = data.component_vector(i);
  const std::vector<Int>& vj = data.component_vector(j);
  if (data.matrix.rows() == 0) return Rational(0);  // disk
  if (det(data.matrix) == 0)
    fail(errc::singular_matrix, "singular Goeritz matrix");
  return inverse_bilinear(vi, data.matrix, vj);
}

Rational double_cover_lk(const GoeritzData& data, const SheetPoint& a,
                         const SheetPoint& b) {
  if (a == b) fail(errc::same_point, "the two preimage points coincide");
  if (a.sheet < 1 || a.sheet > 2 || b.sheet < 1 || b.sheet > 2)
    fail(errc::invalid_spec, "double-cover sheets are 1 and 2");
  Rational lambda = goeritz_lambda(data, a.label, b.label);
  bool same_sheet = a.sheet == b.sheet;
  Rational lk(0);
  if (a.label != b.label && same_sheet) lk = data.ambient(a.label, b.label);
  return same_sheet ? lk - lambda : lk + lambda;
}

RationalFunction seifert_lambda_t(const SeifertData& data, const std::string& i,
                                  const std::string& j) {
  const std::vector<Int>& vi = data.component_vector(i);
  const std::vector<Int>& vj = data.component_vector(j);
  const std::size_t n = data.matrix.rows();
  if (n == 0) return RationalFunction();
  Matrix<LaurentPolynomial> g = seifert_t_matrix(data.matrix);
  std::vector<LaurentPolynomial> lv(n), lw(n);
  for (std::size_t k = 0; k < n; ++k) {
    lv[k] = LaurentPolynomial(vi[k]);
    lw[k] = LaurentPolynomial(vj[k]);
  }
  return inverse_bilinear(lv, g, lw);
}

// One certified solve of G_omega x = v_j followed by v_i . x.
std::optional<ComplexApprox> seifert_lambda_omega_at(
    const SeifertData& data, const std::string& i_label,
    const std::string& j_label, const RootOfUnity& omega, mpfr_prec_t prec) {
  const Matrix<Int>& m = data.matrix;
  const std::vector<Int>& vi = data.component_vector(i_label);
  const std::vector<Int>& vj = data.component_vector(j_label);
  const std::size_t n = m.rows();
  if (n == 0) return ComplexBall(prec);
  ComplexBall w = ComplexBall::root_of_unity(omega, prec);
  ComplexBall one = ComplexBall::from_int(1, prec);
  ComplexBall u = one - w.conj();
  ComplexBall v = one - w;
  std::vector<std::vector<ComplexBall>> g(
      n, std::vector<ComplexBall>(n, ComplexBall(prec)));
  std::vector<ComplexBall> rhs(n, ComplexBall(prec));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      g[i][j] = u.scaled(Ball::from_int(m(i, j), prec)) +
                v.scaled(Ball::from_int(m(j, i), prec));
    rhs[i] = ComplexBall::from_int(vj[i], prec);
  }
  // Gaussian elimination; every pivot must be certified away from zero.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i)
      if (!g[i][k].contains_zero()) {
        best = i;
        break;
      }
    if (best == n) return std::nullopt;
    if (best != k) {
      std::swap(g[best], g[k]);
      std::swap(rhs[best], rhs[k]);
    }
    auto piv = g[k][k].try_recip();
    if (!piv) return std::nullopt;
    for (std::size_t i = k + 1; i < n; ++i) {
      ComplexBall f = g[i][k] * *piv;
      for (std::size_t j = k + 1; j < n; ++j)
        g[i][j] = g[i][j] - f * g[k][j];
      rhs[i] = rhs[i] - f * rhs[k];
    }
  }
  std::vector<ComplexBall> x(n, ComplexBall(prec));
  for (std::size_t i = n; i-- > 0;) {
    ComplexBall acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc = acc - g[i][j] * x[j];
    auto q = try_divide(acc, g[i][i]);
    if (!q) return std::nullopt;
    x[i] = *q;
  }
  ComplexBall out(prec);
  for (std::size_t i = 0; i < n; ++i)
    out = out + x[i].scaled(Ball::from_int(vi[i], prec));
  return out;
}

ComplexApprox seifert_lambda_omega(const SeifertData& data,
                                   const std::string& i, const std::string& j,
                                   const RootOfUnity& omega, int precision_bits,
                                   int precision_cap) {
  data.component_vector(i);
  data.component_vector(j);
  if (data.matrix.rows() == 0)
    return ComplexBall(static_cast<mpfr_prec_t>(
        precision_bits < kMinPrecision ? kMinPrecision : precision_bits));
  if (vanishes_at(alexander(data.matrix), omega))
    fail(errc::omega_is_alexander_root,
         "omega is a root of the Alexander polynomial");
  return escalate(precision_bits, precision_cap,
                  [&](mpfr_prec_t prec) -> std::optional<ComplexBall> {
                    return seifert_lambda_omega_at(data, i, j, omega, prec);
                  });
}

Matrix<Int> branched_matrix(const Matrix<Int>& m, int p) {
  if (p < 2) fail(errc::invalid_spec, "branched cover needs p >= 2");
  if (!m.is_square()) fail(errc::not_square, "Seifert matrix must be square");
  const std::size_t n = m.rows();
  const std::size_t blocks = static_cast<std::size_t>(p - 1);
  Matrix<Int> sym = m + m.transpose();
  Matrix<Int> neg_mt(n, n), neg_m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      neg_mt(i, j) = -m(j, i);
      neg_m(i, j) = -m(i, j);
    }
  Matrix<Int> out(blocks * n, blocks * n);
  for (std::size_t b = 0; b < blocks; ++b) {
    out.set_block(b * n, b * n, sym);
    if (b + 1 < blocks) {
      out.set_block(b * n, (b + 1) * n, neg_mt);
      out.set_block((b + 1) * n, b * n, neg_m);
    }
  }
  return out;
}

namespace {

std::vector<Int> padded_vector(const std::vector<Int>& v, int p, int k) {
  const std::size_t n = v.size();
  std::vector<Int> out(static_cast<std::size_t>(p - 1) * n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(k - 1) * n + i] = v[i];
  return out;
}

}  // namespace

Rational lambda_kl(const SeifertData& data, int p, int k, int l,
                   const std::string& i, const std::string& j) {
  if (p < 2) fail(errc::invalid_spec, "branched cover needs p >= 2");
  if (k < 1 || k > p - 1 || l < 1 || l > p - 1)
    fail(errc::invalid_spec, "lambda^{(k,l)} needs k, l in [1, p-1]");
  const std::vector<Int>& vi = data.component_vector(i);
  const std::vector<Int>& vj = data.component_vector(j);
  if (data.matrix.rows() == 0) return Rational(0);  // disk
  Matrix<Int> mp = branched_matrix(data.matrix, p);
  if (det(mp) == 0)
    fail(errc::not_rational_homology_sphere,
         "the " + std::to_string(p) +
             "-fold branched cover is not a rational homology sphere");
  return inverse_bilinear(padded_vector(vi, p, k), mp,
                          padded_vector(vj, p, l));
}

Rational p_fold_lk(const SeifertData& data, int p, const SheetPoint& a,
                   const SheetPoint& b) {
  if (a == b) fail(errc::same_point, "the two preimage points coincide");
  if (p < 2) fail(errc::invalid_spec, "branched cover needs p >= 2");
  if (a.sheet < 1 || a.sheet > p || b.sheet < 1 || b.sheet > p)
    fail(errc::invalid_spec, "sheets range over 1..p");
  // The case table assumes k <= l; lk is symmetric in its two points.
  const SheetPoint& lo = a.sheet <= b.sheet ? a : b;
  const SheetPoint& hi = a.sheet <= b.sheet ? b : a;
  const std::string &i = lo.label, &j = hi.label;
  const int k = lo.sheet, l = hi.sheet;
  auto lam = [&](int kk, int ll) { return lambda_kl(data, p, kk, ll, i, j); };

  Rational acc(0);
  if (k == 1 && l == 1)
    acc = -lam(1, 1);
  else if (k == p && l == p)
    acc = -lam(p - 1, p - 1);
  else if (k == 1 && l == p)
    acc = lam(1, p - 1);
  else if (k == 1)  // 2 <= l <= p-1
    acc = lam(1, l - 1) - lam(1, l);
  else if (l == p)  // 2 <= k <= p-1
    acc = -lam(k - 1, p - 1) + lam(k, p - 1);
  else  // 2 <= k <= l <= p-1
    acc = -lam(k - 1, l - 1) + lam(k - 1, l) + lam(k, l - 1) - lam(k, l);

  if (i != j && k == l) acc += data.ambient(i, j);
  return acc;
}

RationalFunction infinite_cyclic_lk(const SeifertData& data,
                                    const std::string& i, const std::string& j) {
  RationalFunction lambda = seifert_lambda_t(data, i, j);
  Rational lk(0);
  if (i == j) {
    auto it = data.ambient_lk.find(ordered_pair(i, j));
    if (it != data.ambient_lk.end()) lk = it->second;  // declared framing
  } else {
    lk = data.ambient(i, j);
  }
  LaurentPolynomial one_minus_t{{0, 1}, {1, -1}};
  return RationalFunction(one_minus_t) * lambda +
         RationalFunction::from_rational(lk);
}

RationalFunction eta_function(const SeifertData& data, const std::string& i) {
  LaurentPolynomial one_minus_t{{0, 1}, {1, -1}};
  return RationalFunction(one_minus_t) * seifert_lambda_t(data, i, i);
}

Matrix<RationalFunction> dual_basis_linking(const Matrix<Int>& m) {
  const std::size_t n = m.rows();
  if (!m.is_square()) fail(errc::not_square, "Seifert matrix must be square");
  if (n == 0) return Matrix<RationalFunction>();
  Matrix<RationalFunction> g(n, n);
  Matrix<LaurentPolynomial> gt = seifert_t_matrix(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = RationalFunction(gt(i, j));
  Matrix<RationalFunction> inv = inverse(g);
  LaurentPolynomial one_minus_t{{0, 1}, {1, -1}};
  return RationalFunction(one_minus_t) * inv;
}

}  // namespace lnk
