#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lnk/matrix.hpp"

namespace lnk {

using LabelPair = std::pair<std::string, std::string>;

inline LabelPair ordered_pair(const std::string& a, const std::string& b) {
  return a <= b ? LabelPair{a, b} : LabelPair{b, a};
}

// A rational framed link: symmetric linking matrix with integer
// off-diagonal linking numbers and rational framings on the diagonal,
// satellite components with their linking vectors against the surgery
// components, and ambient linking numbers between satellites.
struct FramedLinkData {
  std::vector<std::string> names;  // surgery component labels J1..Jn
  Matrix<Rational> linking_matrix;
  std::map<std::string, std::vector<Int>> satellites;
  std::map<LabelPair, Rational> ambient_lk;

  const std::vector<Int>& satellite_vector(const std::string& label) const;
};

// Change of Dehn filling: [delta] = B [mu], Q diagonal with the
// intersection numbers q_i = mu_i . delta_i (signed, never reoriented).
struct FillingSlopes {
  Matrix<Rational> B;
  Matrix<Rational> Q;
};

// The correction term -v1 G^{-1} v2^T of the linking number under surgery
// with linking matrix G; the full lk is ambient + correction.
Rational surgery_lk_delta(const Matrix<Rational>& g, const std::vector<Int>& v1,
                          const std::vector<Int>& v2);

// lk in the surgered manifold for a satellite pair. Singular linking
// matrices are reduced to their nonsingular block (after clearing
// denominators, by unimodular congruence); a satellite vector pairing
// nontrivially against the kernel block means the class is not torsion
// and the linking number is undefined.
Rational lk_in_surgered_manifold(const FramedLinkData& data,
                                 const LabelPair& pair);

// The surgery-linking matrices of the two fillings: G = Q^{-1} B and
// H = -Q^{-1} B^{-1}, so that B = QG and B^{-1} = -QH hold exactly.
std::pair<Matrix<Rational>, Matrix<Rational>> surgery_duality(
    const FillingSlopes& slopes);

}  // namespace lnk
