#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mhopf/rational.hpp"

namespace mhopf {

using Index = std::size_t;
using Vec = std::vector<Rational>;
using SparseVec = std::vector<std::pair<Index, Rational>>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
Rational vec_dot(const Vec& a, const Vec& b);

// Exact rational matrix.  Entries live in a sparse (row, col) -> value map
// with no explicit zeros; storage falls back to a dense array once fill-in
// exceeds half of the matrix.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(Index rows, Index cols);
  static Matrix identity(Index n);
  static Matrix permutation(const std::vector<Index>& image);  // e_i -> e_image[i]
  static Matrix from_columns(Index rows, const std::vector<Vec>& cols);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index nonzero_count() const;
  bool is_dense() const { return dense_; }

  Rational at(Index r, Index c) const;
  void set(Index r, Index c, Rational v);
  void add_to(Index r, Index c, const Rational& v);

  // Visits nonzero entries in row-major order.
  void for_each_nonzero(const std::function<void(Index, Index, const Rational&)>& fn) const;

  SparseVec column(Index c) const;
  std::vector<SparseVec> columns() const;
  Vec column_dense(Index c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // M * v
  Matrix kron(const Matrix& o) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  Index rows_, cols_;
  bool dense_ = false;
  std::map<std::pair<Index, Index>, Rational> sparse_;
  std::vector<Rational> dense_store_;

  void densify();
};

// Fraction-free (Bareiss) elimination with a fixed pivot rule: columns are
// scanned left to right and the first row holding a nonzero entry wins.  All
// operations below are deterministic and total.

// Solves m * x = rhs exactly.  Returns one solution (free variables pinned to
// zero) or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

Index rank(const Matrix& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);

// Basis of the right kernel { x : m x = 0 }, in deterministic order.
std::vector<Vec> kernel_basis(const Matrix& m);

// Expresses v as a linear combination of the generators, if possible.
std::optional<Vec> membership_in_span(const Vec& v, const std::vector<Vec>& generators);

// A functional on coordinates; used for counits and leg contractions.
struct LinearFunctional {
  Vec coords;
  Rational apply(const Vec& v) const { return vec_dot(coords, v); }
};

}  // namespace mhopf
