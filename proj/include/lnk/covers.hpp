#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnk/ball.hpp"
#include "lnk/matrix.hpp"
#include "lnk/surgery.hpp"

namespace lnk {

// Spanning-surface data for an unoriented (possibly nonorientable)
// surface: the symmetric Goeritz matrix lk(a_i, tau a_j), one linking
// vector per satellite component, ambient linking numbers, and optionally
// the normal Euler number of the surface. A 0x0 matrix encodes the disk.
struct GoeritzData {
  Matrix<Int> matrix;
  std::map<std::string, std::vector<Int>> components;
  std::map<LabelPair, Rational> ambient_lk;
  std::optional<Int> euler_number;

  const std::vector<Int>& component_vector(const std::string& label) const;
  Rational ambient(const std::string& i, const std::string& j) const;
};

// Seifert-surface data: integer Seifert matrix with det(M - M^T) = 1,
// linking vectors and ambient linking numbers as above.
struct SeifertData {
  Matrix<Int> matrix;
  std::map<std::string, std::vector<Int>> components;
  std::map<LabelPair, Rational> ambient_lk;

  const std::vector<Int>& component_vector(const std::string& label) const;
  Rational ambient(const std::string& i, const std::string& j) const;
};

void validate_goeritz(const GoeritzData& data);   // throws InvariantViolation
void validate_seifert(const SeifertData& data);

// A point of the preimage of a component: label K addressed in sheet k.
struct SheetPoint {
  std::string label;
  int sheet = 1;
  bool operator==(const SheetPoint&) const = default;
};

// tM - M^T, the Seifert pairing presentation over Z[t, t^-1].
Matrix<LaurentPolynomial> seifert_t_matrix(const Matrix<Int>& m);

// lambda_F(K_i, K_j) = V(K_i) G^{-1} V(K_j)^T; 0 for the disk.
Rational goeritz_lambda(const GoeritzData& data, const std::string& i,
                        const std::string& j);

// Linking number in the double branched cover:
// lk = (1 - delta_ij) delta_kl lk(K_i, K_j) + (-1)^{delta_kl} lambda_F.
Rational double_cover_lk(const GoeritzData& data, const SheetPoint& a,
                         const SheetPoint& b);

// lambda_F(K_i, K_j)(t) = V(K_i) (tM - M^T)^{-1} V(K_j)^T.
RationalFunction seifert_lambda_t(const SeifertData& data, const std::string& i,
                                  const std::string& j);

// lambda_F(K_i, K_j; omega) = V(K_i) G_omega^{-1} V(K_j)^T, with
// G_omega = (1 - conj(omega)) M + (1 - omega) M^T, computed by certified
// ball elimination. omega must avoid the roots of the Alexander polynomial.
ComplexApprox seifert_lambda_omega(const SeifertData& data,
                                   const std::string& i, const std::string& j,
                                   const RootOfUnity& omega, int precision_bits,
                                   int precision_cap = kDefaultPrecisionCap);

// Single fixed-precision attempt behind seifert_lambda_omega; nullopt when
// the pivots cannot be certified. The caller is responsible for checking
// that omega avoids the Alexander roots.
std::optional<ComplexApprox> seifert_lambda_omega_at(
    const SeifertData& data, const std::string& i, const std::string& j,
    const RootOfUnity& omega, mpfr_prec_t prec);

// The (p-1)n x (p-1)n presentation matrix of H_1 of the p-fold cyclic
// branched cover: M + M^T on the diagonal, -M^T above, -M below.
Matrix<Int> branched_matrix(const Matrix<Int>& m, int p);

// lambda^{(k,l)}(K_i, K_j) = V^k M_p^{-1} (V^l)^T for k, l in [1, p-1].
Rational lambda_kl(const SeifertData& data, int p, int k, int l,
                   const std::string& i, const std::string& j);

// Linking number in the p-fold cyclic branched cover (sheets 1..p).
Rational p_fold_lk(const SeifertData& data, int p, const SheetPoint& a,
                   const SheetPoint& b);

// Linking pairing in the infinite cyclic cover for lifts in the same
// fundamental region: (1 - t) lambda(t) + lk(K_i, K_j). For i = j the
// zero-framed parallel convention applies unless the data declares an
// ambient self-pairing.
RationalFunction infinite_cyclic_lk(const SeifertData& data,
                                    const std::string& i, const std::string& j);

// The self-pairing eta(K, K_i; t) = (1 - t) lambda(K_i, K_i)(t); satisfies
// eta(t) = eta(t^-1).
RationalFunction eta_function(const SeifertData& data, const std::string& i);

// The full matrix (1 - t)(tM - M^T)^{-1}: pairwise linking of the dual
// basis curves in the infinite cyclic cover.
Matrix<RationalFunction> dual_basis_linking(const Matrix<Int>& m);

}  // namespace lnk
