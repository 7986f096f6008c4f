#pragma once

// Hand-computed expected values for the positive instances.  Everything here
// was worked out on paper from the defining tables before the engine ran and
// is frozen; tests compare engine output against these numbers, never the
// other way around.

#include <vector>

#include "mhopf/algebra.hpp"
#include "mhopf/matrix.hpp"

namespace oracles {

using mhopf::AlgebraRef;
using mhopf::Index;
using mhopf::Matrix;
using mhopf::Rational;
using mhopf::StructureTriple;
using mhopf::Vec;

// Basis order 1, g, x, gx.  Relations: g^2 = 1, x^2 = 0, xg = -gx.
inline std::vector<StructureTriple> h4_triples() {
  return {
      {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
      {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 2, 3, 1}, {1, 3, 2, 1},
      {2, 0, 2, 1}, {2, 1, 3, -1},
      {3, 0, 3, 1}, {3, 1, 2, -1},
  };
}

// D(1) = 1 (x) 1, D(g) = g (x) g, D(x) = x (x) 1 + g (x) x,
// D(gx) = gx (x) g + 1 (x) gx, in lexicographic pair coordinates.
inline std::vector<Vec> h4_coproduct_tensors() {
  std::vector<Vec> t(4, Vec(16));
  t[0][0] = 1;
  t[1][5] = 1;
  t[2][8] = 1;
  t[2][6] = 1;
  t[3][13] = 1;
  t[3][3] = 1;
  return t;
}

inline Vec h4_epsilon() { return {1, 1, 0, 0}; }

// S: 1 -> 1, g -> g, x -> -gx, gx -> x.
inline Matrix h4_antipode() {
  Matrix s(4, 4);
  s.set(0, 0, 1);
  s.set(1, 1, 1);
  s.set(3, 2, -1);
  s.set(2, 3, 1);
  return s;
}

// S': 1 -> 1, g -> g, x -> gx, gx -> -x.
inline Matrix h4_antipode_inverse() {
  Matrix s(4, 4);
  s.set(0, 0, 1);
  s.set(1, 1, 1);
  s.set(3, 2, 1);
  s.set(2, 3, -1);
  return s;
}

// Cyclic group of order k: epsilon is identically one on the group basis and
// the antipode permutes i -> (k - i) mod k.  The same permutation is the
// antipode of the function algebra, whose counit is [i = 0].
inline Vec cyclic_group_epsilon(Index k) { return Vec(k, Rational(1)); }

inline Vec cyclic_function_epsilon(Index k) {
  Vec e(k);
  e[0] = 1;
  return e;
}

inline Matrix cyclic_antipode(Index k) {
  std::vector<Index> image(k);
  for (Index i = 0; i < k; ++i) image[i] = (k - i) % k;
  return Matrix::permutation(image);
}

// Canonical maps of the two element group algebra with the diagonal
// coproduct, as permutations of lexicographic basis pairs:
//   T1, T3: (a, b) -> (a, a + b)     T2, T4: (c, a) -> (c + a, a)
inline Matrix qc2_t1_matrix() { return Matrix::permutation({0, 1, 3, 2}); }
inline Matrix qc2_t2_matrix() { return Matrix::permutation({0, 3, 2, 1}); }

}  // namespace oracles
