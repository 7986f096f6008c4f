#pragma once

#include <optional>

#include "mhopf/algebra.hpp"

namespace mhopf {

// A two-sided multiplier on an algebra A: a pair of matrices (L, R) with
//   L(ab) = L(a) b,   (ab) R = a R(b)   and   a (x b) = (a x) b.
// The compatibility law holds for every Multiplier ever constructed; inputs
// crossing a trust boundary are verified entry by entry.
class Multiplier {
 public:
  // Verifies the left/right module laws and the mixed compatibility law.
  // Throws InputError with the offending basis pair on violation.
  static Multiplier verified(AlgebraRef algebra, Matrix left_action, Matrix right_action);

  static Multiplier embed(const Element& x);
  static Multiplier unit(AlgebraRef algebra);
  static Multiplier zero(AlgebraRef algebra);
  static Multiplier from_linear_combination(AlgebraRef algebra,
                                            const std::vector<const Multiplier*>& parts,
                                            const Vec& coefficients);

  const AlgebraRef& algebra() const { return algebra_; }
  const Matrix& left_action() const { return left_; }
  const Matrix& right_action() const { return right_; }

  Vec apply_left(const Vec& b) const { return left_.apply(b); }    // x b
  Vec apply_right(const Vec& a) const { return right_.apply(a); }  // a x

  // Multiplier product (L1 L2, R2 R1).  The module laws of the factors force
  // the laws of the composite, so no re-verification happens here; the unit
  // tests assert this closure property on sampled products.
  Multiplier operator*(const Multiplier& o) const;

  bool operator==(const Multiplier& o) const;
  bool operator!=(const Multiplier& o) const { return !(*this == o); }

  // The element a with embed(a) == *this, if the multiplier lies in A.
  // Requires a non-degenerate idempotent algebra (InputError otherwise).
  std::optional<Element> membership() const;

 private:
  Multiplier(AlgebraRef algebra, Matrix left, Matrix right)
      : algebra_(std::move(algebra)), left_(std::move(left)), right_(std::move(right)) {}

  friend Multiplier left_leg(const TensorSquare& sq, const Vec& x);
  friend Multiplier right_leg(const TensorSquare& sq, const Vec& y);

  AlgebraRef algebra_;
  Matrix left_, right_;
};

// The legs x (x) 1 and 1 (x) y as multipliers of the tensor square.
Multiplier left_leg(const TensorSquare& sq, const Vec& x);
Multiplier right_leg(const TensorSquare& sq, const Vec& y);

}  // namespace mhopf
