#pragma once

#include <utility>

#include "lnk/ball.hpp"
#include "lnk/covers.hpp"
#include "lnk/matrix.hpp"

namespace lnk {

// The Alexander polynomial det(tM - M^T) in canonical unit form (lowest
// exponent 0 and value 1 at t = 1). The empty matrix gives 1.
LaurentPolynomial alexander(const Matrix<Int>& m);

// The Conway polynomial nabla(z): det(t^-1 M - t M^T) rewritten in powers
// of z = t - t^-1. A nonzero remainder in the change of basis means the
// matrix was not a valid Seifert matrix.
LaurentPolynomial conway(const Matrix<Int>& m);

// Tristram-Levine signature sigma_omega: the signature of
// (1-conj(omega)) M + (1-omega) M^T. At angle 1/2 this is the ordinary
// knot signature.
long tristram_levine(const Matrix<Int>& m, const RootOfUnity& omega,
                     int precision_bits,
                     int precision_cap = kDefaultPrecisionCap);

// sign(G) + e(F)/2, the knot signature computed from an unoriented
// spanning surface with normal Euler number e(F).
long goeritz_signature(const GoeritzData& data);

// 1/n-surgery along the boundary of a disk D meeting the surface in an
// arc: v is the linking vector of dD against the surface basis, epsilon
// the band sign, disk_link = |lk(dD, K)| (0 in the oriented setting).
struct CrossingChangeSpec {
  std::vector<Int> v;
  Int n = 1;
  int epsilon = 1;
  Int disk_link = 0;

  void validate(std::size_t matrix_size) const;
};

// The Seifert matrix of the surgered knot K_n in the basis (a, b, alpha):
// top-left block [[0, 1], [0, -n]], a-row epsilon*v against alpha, M in
// the alpha block, zeros elsewhere.
Matrix<Int> crossing_change_seifert(const Matrix<Int>& m,
                                    const CrossingChangeSpec& spec);

// Canonical (1 - n(t-1) lambda(dD)(t)) * Delta_K(t); unit-equal to the
// Alexander polynomial of crossing_change_seifert(m, spec).
LaurentPolynomial crossing_change_alexander(const Matrix<Int>& m,
                                            const CrossingChangeSpec& spec);

// Predicted sigma_omega(K_n): sigma_omega(K) - 2 sign(n) exactly when the
// certified real value n(1-omega)(1-conj(omega)) lambda(dD; omega)
// exceeds 1, unchanged when below 1 (equality cannot occur for valid
// input and raises NumericallyUncertain past the precision cap).
long crossing_change_signature(const Matrix<Int>& m,
                               const CrossingChangeSpec& spec,
                               const RootOfUnity& omega, int precision_bits,
                               int precision_cap = kDefaultPrecisionCap);

// Both sides of the Conway ratio identity:
// lhs = n(1-omega)(1-conj(omega)) lambda(dD; omega),
// rhs = 1 - nabla_{K_n}(i|1-omega|) / nabla_K(i|1-omega|), with nabla_{K_n}
// computed from the stabilized matrix. The two balls must overlap.
std::pair<ComplexApprox, ComplexApprox> conway_ratio_identity(
    const Matrix<Int>& m, const CrossingChangeSpec& spec,
    const RootOfUnity& omega, int precision_bits,
    int precision_cap = kDefaultPrecisionCap);

// Predicted sigma(K_n) from an unoriented surface:
// sign(diag(1/2n - lambda, -2n)) + sign(G) + e(F)/2 + n*disk_link,
// decided by exact rational comparison of 2n*lambda against 1.
long crossing_change_signature_unoriented(const GoeritzData& data,
                                          const CrossingChangeSpec& spec);

// nabla(z) evaluated at z = i*s for a real ball s >= 0; real for knots
// (only even powers of z appear).
Ball conway_at_imaginary(const LaurentPolynomial& nabla, const Ball& s);

// Certified ball for |1 - omega| = 2 sin(pi a/q).
Ball one_minus_omega_abs(const RootOfUnity& omega, mpfr_prec_t prec);

}  // namespace lnk
