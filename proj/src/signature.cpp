#include "lnk/signature.hpp"

#include <optional>
#include <vector>

#include "lnk/laurent.hpp"

namespace lnk {

SignatureTriple symmetric_signature(const Matrix<Rational>& a) {
  if (!a.is_square()) fail(errc::not_square, "signature of a nonsquare matrix");
  if (!a.is_symmetric())
    fail(errc::not_symmetric, "signature of an asymmetric matrix");
  Matrix<Rational> w = a;
  const std::size_t n = w.rows();
  std::vector<bool> done(n, false);
  SignatureTriple sig;

  auto eliminate_with_diagonal = [&](std::size_t k) {
    const Rational piv = w(k, k);
    sig.positives += piv > 0;
    sig.negatives += piv < 0;
    done[k] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || w(i, k) == 0) continue;
      Rational f = w(i, k) / piv;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        w(i, j) -= f * w(k, j);
      }
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) w(j, i) = w(i, j);
    }
  };

  for (std::size_t handled = 0; handled < n;) {
    // Prefer a nonzero diagonal pivot.
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && w(i, i) != 0) {
        k = i;
        break;
      }
    if (k < n) {
      eliminate_with_diagonal(k);
      ++handled;
      continue;
    }
    // All remaining diagonal entries vanish: either the block is zero, or
    // a nonzero off-diagonal entry gives a hyperbolic plane.
    std::size_t p = n, q = n;
    for (std::size_t i = 0; i < n && p == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[j] && w(i, j) != 0) {
          p = i;
          q = j;
          break;
        }
    }
    if (p == n) {
      for (std::size_t i = 0; i < n; ++i)
        if (!done[i]) {
          done[i] = true;
          ++sig.zeros;
          ++handled;
        }
      break;
    }
    // Split off the hyperbolic block on rows/cols (p, q): with b = w(p,q),
    // the block [[0, b], [b, 0]] contributes (+1, -1); the Schur
    // complement subtracts (w(i,p) w(q,j) + w(i,q) w(p,j)) / b.
    const Rational b = w(p, q);
    sig.positives += 1;
    sig.negatives += 1;
    done[p] = done[q] = true;
    handled += 2;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        w(i, j) -= (w(i, p) * w(q, j) + w(i, q) * w(p, j)) / b;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i])
        for (std::size_t j = 0; j < n; ++j)
          if (!done[j]) w(j, i) = w(i, j);
  }
  return sig;
}

namespace {

// One certified Hermitian congruence reduction pass at fixed precision.
// Returns nullopt when some pivot cannot be certified nonzero.
std::optional<SignatureTriple> hermitian_reduce(const Matrix<Int>& m,
                                                const RootOfUnity& omega,
                                                mpfr_prec_t prec) {
  const std::size_t n = m.rows();
  ComplexBall w = ComplexBall::root_of_unity(omega, prec);
  ComplexBall one = ComplexBall::from_int(1, prec);
  ComplexBall u = one - w.conj();  // 1 - conj(omega)
  ComplexBall v = one - w;         // 1 - omega
  std::vector<std::vector<ComplexBall>> g(
      n, std::vector<ComplexBall>(n, ComplexBall(prec)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g[i][j] = u.scaled(Ball::from_int(m(i, j), prec)) +
                v.scaled(Ball::from_int(m(j, i), prec));

  SignatureTriple sig;
  for (std::size_t k = 0; k < n; ++k) {
    // Best certified-nonzero diagonal pivot (the diagonal is real).
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (g[i][i].real().certified_sign() == 0) continue;
      if (best == n) best = i;
    }
    if (best == n) {
      // Try to build a nonzero diagonal entry from an off-diagonal one:
      // adding mu * row_j (and conj(mu) * col_j) to row/col i turns
      // g[i][i] into g[i][i] + 2 Re(conj(mu) g[i][j]) + |mu|^2 g[j][j].
      std::size_t pi = n, pj = n;
      bool use_imag = false;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (g[i][j].real().certified_sign() != 0) {
            pi = i;
            pj = j;
            use_imag = false;
            break;
          }
          if (g[i][j].imaginary().certified_sign() != 0) {
            pi = i;
            pj = j;
            use_imag = true;
            break;
          }
        }
      if (pi == n) return std::nullopt;
      ComplexBall mu = use_imag
                           ? ComplexBall(Ball(prec), Ball::from_int(1, prec))
                           : ComplexBall::from_int(1, prec);
      for (std::size_t t = 0; t < n; ++t)
        g[pi][t] = g[pi][t] + mu * g[pj][t];
      for (std::size_t t = 0; t < n; ++t)
        g[t][pi] = g[t][pi] + mu.conj() * g[t][pj];
      if (g[pi][pi].real().certified_sign() == 0) return std::nullopt;
      best = pi;
    }
    if (best != k) {
      std::swap(g[best], g[k]);
      for (std::size_t t = 0; t < n; ++t) std::swap(g[t][best], g[t][k]);
    }
    int s = g[k][k].real().certified_sign();
    if (s > 0)
      ++sig.positives;
    else
      ++sig.negatives;
    // Schur complement on the trailing block.
    auto piv = g[k][k].try_recip();
    if (!piv) return std::nullopt;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        g[i][j] = g[i][j] - g[i][k] * *piv * g[k][j];
  }
  return sig;
}

}  // namespace

SignatureTriple hermitian_signature_at_omega(const Matrix<Int>& m,
                                             const RootOfUnity& omega,
                                             int precision_bits,
                                             int precision_cap) {
  if (!m.is_square())
    fail(errc::not_square, "Hermitian form needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return SignatureTriple{};

  // det((1-conj(w))M + (1-w)M^T) = (w-1)^n P(conj(w)), P(t) = det(tM - M^T);
  // the form is singular exactly when P vanishes at omega's conjugate.
  Matrix<LaurentPolynomial> gt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gt(i, j) = LaurentPolynomial::monomial(m(i, j), 1);
      gt(i, j) -= LaurentPolynomial(m(j, i));
    }
  LaurentPolynomial p = det(gt);
  if (vanishes_at(p, omega))
    fail(errc::singular_form, "the Hermitian form is singular at omega");

  if (omega.is_minus_one()) {
    Matrix<Rational> s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s(i, j) = Rational(2 * (m(i, j) + m(j, i)));
    SignatureTriple sig = symmetric_signature(s);
    if (sig.zeros != 0)
      fail(errc::singular_form, "the Hermitian form is singular at omega");
    return sig;
  }

  return escalate(precision_bits, precision_cap,
                  [&](mpfr_prec_t prec) -> std::optional<SignatureTriple> {
                    return hermitian_reduce(m, omega, prec);
                  });
}

std::pair<Matrix<Int>, Matrix<Int>> unimodular_split(const Matrix<Int>& a) {
  if (!a.is_square()) fail(errc::not_square, "unimodular split of a nonsquare matrix");
  if (!a.is_symmetric())
    fail(errc::not_symmetric, "unimodular split of an asymmetric matrix");
  const std::size_t n = a.rows();
  Matrix<Int> w = a;
  Matrix<Int> u = Matrix<Int>::identity(n);  // invariant: w = a * u

  // Integer column echelon by unimodular column operations; the columns of
  // u over the zero columns of w form a primitive kernel basis.
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < n && pivot < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = pivot; j < n; ++j) {
        if (w(r, j) == 0) continue;
        if (best == n || abs(w(r, j)) < abs(w(r, best))) best = j;
      }
      if (best == n) break;
      if (best != pivot) {
        w.swap_cols(pivot, best);
        u.swap_cols(pivot, best);
      }
      bool others = false;
      for (std::size_t j = pivot + 1; j < n; ++j) {
        if (w(r, j) == 0) continue;
        Int q = floor_div(w(r, j), w(r, pivot));
        if (q != 0) {
          for (std::size_t i = 0; i < n; ++i) {
            w(i, j) -= q * w(i, pivot);
            u(i, j) -= q * u(i, pivot);
          }
        }
        if (w(r, j) != 0) others = true;
      }
      if (!others) {
        ++pivot;
        break;
      }
    }
  }

  const std::size_t rank = pivot;
  Matrix<Int> put = u.transpose() * a * u;  // u^T A u = B (+) 0 exactly
  Matrix<Int> b = put.block(0, 0, rank, rank);
  return {u, b};
}

}  // namespace lnk
