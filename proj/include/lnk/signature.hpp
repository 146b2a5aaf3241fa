#pragma once

#include <cstddef>
#include <utility>

#include "lnk/ball.hpp"
#include "lnk/matrix.hpp"
#include "lnk/root_of_unity.hpp"

namespace lnk {

struct SignatureTriple {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;

  long signature() const {
    return static_cast<long>(positives) - static_cast<long>(negatives);
  }
  bool operator==(const SignatureTriple&) const = default;
};

// Exact inertia of a symmetric rational matrix by congruence
// diagonalization; hyperbolic 2x2 blocks are split off when the remaining
// diagonal vanishes.
SignatureTriple symmetric_signature(const Matrix<Rational>& a);

// Inertia of the Hermitian matrix (1-conj(omega)) M + (1-omega) M^T.
// At omega = -1 the matrix is 2(M + M^T) and the computation is exact
// rational; elsewhere certified ball reduction with precision escalation.
// Singularity is decided exactly first (det(tM - M^T) against the
// cyclotomic polynomial of omega's order) and reported as SingularForm.
SignatureTriple hermitian_signature_at_omega(
    const Matrix<Int>& m, const RootOfUnity& omega, int precision_bits,
    int precision_cap = kDefaultPrecisionCap);

// Unimodular P with P^T A P = B (+) 0-block, B nonsingular of size
// rank(A); A symmetric integer. Returns (P, B).
std::pair<Matrix<Int>, Matrix<Int>> unimodular_split(const Matrix<Int>& a);

}  // namespace lnk
