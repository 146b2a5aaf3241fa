#include "lnk/surgery.hpp"

#include "lnk/signature.hpp"

namespace lnk {

const std::vector<Int>& FramedLinkData::satellite_vector(
    const std::string& label) const {
  auto it = satellites.find(label);
  if (it == satellites.end())
    fail(errc::invalid_spec, "unknown satellite component '" + label + "'");
  return it->second;
}

Rational surgery_lk_delta(const Matrix<Rational>& g, const std::vector<Int>& v1,
                          const std::vector<Int>& v2) {
  if (!g.is_square()) fail(errc::not_square, "linking matrix must be square");
  if (v1.size() != g.rows() || v2.size() != g.rows())
    fail(errc::dimension_mismatch, "linking vector length");
  if (g.rows() == 0) return Rational(0);
  std::vector<Rational> a(v1.size()), b(v2.size());
  for (std::size_t i = 0; i < v1.size(); ++i) a[i] = Rational(v1[i]);
  for (std::size_t i = 0; i < v2.size(); ++i) b[i] = Rational(v2[i]);
  return -inverse_bilinear(a, g, b);
}

namespace {

// Correction for a singular linking matrix: clear denominators, split off
// the nonsingular block by a unimodular congruence, and require both
// vectors to pair trivially with the kernel block.
Rational degenerate_delta(const Matrix<Rational>& g, const std::vector<Int>& v1,
                          const std::vector<Int>& v2) {
  const std::size_t n = g.rows();
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scale = lcm(scale, denominator(g(i, j)));
  Matrix<Int> gi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational e = Rational(scale) * g(i, j);
      gi(i, j) = numerator(e);
    }
  auto [p, b] = unimodular_split(gi);
  const std::size_t rank = b.rows();
  // Transformed vectors P^T v; coordinates beyond the rank pair against
  // the kernel block and must vanish.
  auto transform = [&](const std::vector<Int>& v) {
    std::vector<Int> out(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) out[i] += p(k, i) * v[k];
    return out;
  };
  std::vector<Int> w1 = transform(v1), w2 = transform(v2);
  for (std::size_t i = rank; i < n; ++i)
    if (w1[i] != 0 || w2[i] != 0)
      fail(errc::singular_matrix,
           "satellite class is not torsion in the surgered manifold "
           "(nonzero pairing against the kernel block)");
  w1.resize(rank);
  w2.resize(rank);
  Matrix<Rational> br(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) br(i, j) = Rational(b(i, j));
  // v G^{-1} w = scale * (P^T v)_B (scale G)_B^{-1} (P^T w)_B
  return Rational(scale) * surgery_lk_delta(br, w1, w2);
}

}  // namespace

Rational lk_in_surgered_manifold(const FramedLinkData& data,
                                 const LabelPair& pair) {
  const std::vector<Int>& v1 = data.satellite_vector(pair.first);
  const std::vector<Int>& v2 = data.satellite_vector(pair.second);
  auto amb = data.ambient_lk.find(ordered_pair(pair.first, pair.second));
  if (amb == data.ambient_lk.end())
    fail(errc::missing_ambient_lk,
         pair.first == pair.second
             ? "self-pairing needs an explicitly declared parallel copy: add "
               "an ambient lk entry for (" + pair.first + ", " + pair.second + ")"
             : "ambient linking number for (" + pair.first + ", " +
                   pair.second + ") not provided");
  const Matrix<Rational>& g = data.linking_matrix;
  if (g.rows() == 0) return amb->second;
  if (det(g) != 0) return amb->second + surgery_lk_delta(g, v1, v2);
  return amb->second + degenerate_delta(g, v1, v2);
}

std::pair<Matrix<Rational>, Matrix<Rational>> surgery_duality(
    const FillingSlopes& slopes) {
  const Matrix<Rational>& b = slopes.B;
  const Matrix<Rational>& q = slopes.Q;
  if (!b.is_square() || !q.is_square() || b.rows() != q.rows())
    fail(errc::dimension_mismatch, "B and Q must be square of equal size");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && q(i, j) != 0)
        fail(errc::invalid_spec, "Q must be diagonal");
    if (q(i, i) == 0) fail(errc::invalid_spec, "Q must have nonzero diagonal");
  }
  if (n > 0 && det(b) == 0) fail(errc::singular_matrix, "B is singular");
  Matrix<Rational> g(n, n), h(n, n);
  Matrix<Rational> binv = n > 0 ? inverse(b) : Matrix<Rational>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = b(i, j) / q(i, i);
      h(i, j) = -binv(i, j) / q(i, i);
    }
  return {g, h};
}

}  // namespace lnk
