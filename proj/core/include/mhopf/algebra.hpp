#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhopf/check.hpp"
#include "mhopf/matrix.hpp"

namespace mhopf {

class FiniteAlgebra;
using AlgebraRef = std::shared_ptr<const FiniteAlgebra>;

// One structure constant: e_i * e_j contains c * e_k.
struct StructureTriple {
  Index i, j, k;
  Rational c;
};

// A finite dimensional associative algebra over the rationals, given by
// structure constants on a fixed basis.  No unit is assumed.  Associativity
// is checked exactly on all basis triples at construction.  Instances are
// immutable after creation.
class FiniteAlgebra {
 public:
  static AlgebraRef create(Index dimension, const std::vector<StructureTriple>& triples,
                           std::vector<std::string> basis_labels = {},
                           std::string name = {});

  Index dimension() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<StructureTriple>& triples() const { return triples_; }

  // Expansion of e_i * e_j as a sparse vector.
  const SparseVec& product_terms(Index i, Index j) const;

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec multiply_opposite(const Vec& x, const Vec& y) const;  // product of opposite(A)

  Matrix left_regular(const Vec& x) const;   // b |-> x b
  Matrix right_regular(const Vec& x) const;  // a |-> a x

  // n x n^2 matrix of the multiplication map; column (i*n + j) is e_i e_j.
  const Matrix& multiplication_matrix() const { return mult_matrix_; }

  // No nonzero left or right annihilators.  The witness of a failure is a
  // concrete annihilating element.
  const CheckResult& nondegenerate() const { return nondeg_; }

  // A^2 = A, decided by the rank of the multiplication matrix.
  bool idempotent() const { return idempotent_; }
  CheckResult idempotency_check() const;

  AlgebraRef opposite() const;

  // Upgrades a left-action matrix to the unique element with that action,
  // when one exists.  Requires a non-degenerate idempotent algebra.
  std::optional<Vec> element_with_left_action(const Matrix& left_action) const;
  bool membership_available() const { return membership_inverse_.has_value(); }

 private:
  FiniteAlgebra() = default;

  Index dim_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<StructureTriple> triples_;
  std::vector<SparseVec> table_;  // dim*dim entries, row-major (i, j)
  Matrix mult_matrix_;
  CheckResult nondeg_;
  bool idempotent_ = false;
  // Rows of the defining system L(a) = given, pinned once: the inverse of a
  // full-rank row selection, plus which (j, k) rows were selected.
  std::optional<Matrix> membership_inverse_;
  std::vector<std::pair<Index, Index>> membership_rows_;
};

struct Element {
  AlgebraRef algebra;
  Vec coords;

  static Element basis(const AlgebraRef& a, Index i);
  static Element zero(const AlgebraRef& a);
  static Element from_coords(const AlgebraRef& a, Vec coords);
};

Element multiply(const Element& x, const Element& y);
Element multiply_opposite(const Element& x, const Element& y);

// Tensor index conventions: the basis of A (x) A is e_i (x) e_j at position
// i*n + j (lexicographic, first leg major).  This ordering is normative for
// all matrices over tensor legs.
inline Index pair_index(Index i, Index j, Index n) { return i * n + j; }
inline std::pair<Index, Index> split_pair(Index p, Index n) { return {p / n, p % n}; }
inline Index triple_index(Index a, Index b, Index c, Index n) { return (a * n + b) * n + c; }

// The tensor square A (x) A with the componentwise product.
class TensorSquare {
 public:
  static TensorSquare build(const AlgebraRef& base, Index max_dim = 32);

  const AlgebraRef& base() const { return base_; }
  const AlgebraRef& algebra() const { return algebra_; }
  Index base_dim() const { return n_; }
  Index dim() const { return n_ * n_; }

  // Coordinates of x (x) y.
  Vec tensor(const Vec& x, const Vec& y) const;

  // The flip a (x) b -> b (x) a as a dim x dim permutation matrix.
  const Matrix& flip() const { return flip_; }

 private:
  AlgebraRef base_;
  AlgebraRef algebra_;
  Index n_ = 0;
  Matrix flip_;
};

// Local unit checks (pure linear algebra, no coproduct involved).
CheckResult local_units_left(const FiniteAlgebra& a);   // each basis b lies in A b
CheckResult local_units_right(const FiniteAlgebra& a);  // each basis b lies in b A
// A single e with e e_i = e_i e = e_i for every basis element; the payload
// carries its coordinates when found.
struct CommonUnit {
  CheckResult result;
  std::optional<Vec> unit;
};
CommonUnit local_unit_common(const FiniteAlgebra& a);

}  // namespace mhopf
