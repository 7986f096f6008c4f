#include "mhopf/multiplier.hpp"

#include <string>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

std::string pair_text(const FiniteAlgebra& a, Index i, Index j) {
  return "(" + a.basis_labels()[i] + ", " + a.basis_labels()[j] + ")";
}

}  // namespace

Multiplier Multiplier::verified(AlgebraRef algebra, Matrix left_action, Matrix right_action) {
  const Index n = algebra->dimension();
  if (left_action.rows() != n || left_action.cols() != n || right_action.rows() != n ||
      right_action.cols() != n) {
    throw InputError("multiplier action shape mismatch");
  }
  for (Index a = 0; a < n; ++a) {
    const Vec la = left_action.column_dense(a);
    const Vec ra = right_action.column_dense(a);
    Vec ea(n);
    ea[a] = 1;
    for (Index b = 0; b < n; ++b) {
      Vec ab(n);
      for (const auto& [k, c] : algebra->product_terms(a, b)) ab[k] = c;
      Vec eb(n);
      eb[b] = 1;
      const Vec lb = left_action.column_dense(b);
      const Vec rb = right_action.column_dense(b);
      if (left_action.apply(ab) != algebra->multiply(la, eb)) {
        throw InputError("left multiplier law violated at basis pair " +
                         pair_text(*algebra, a, b));
      }
      if (right_action.apply(ab) != algebra->multiply(ea, rb)) {
        throw InputError("right multiplier law violated at basis pair " +
                         pair_text(*algebra, a, b));
      }
      if (algebra->multiply(ea, lb) != algebra->multiply(ra, eb)) {
        throw InputError("multiplier compatibility law violated at basis pair " +
                         pair_text(*algebra, a, b));
      }
    }
  }
  return Multiplier(std::move(algebra), std::move(left_action), std::move(right_action));
}

Multiplier Multiplier::embed(const Element& x) {
  return Multiplier(x.algebra, x.algebra->left_regular(x.coords),
                    x.algebra->right_regular(x.coords));
}

Multiplier Multiplier::unit(AlgebraRef algebra) {
  const Index n = algebra->dimension();
  return Multiplier(std::move(algebra), Matrix::identity(n), Matrix::identity(n));
}

Multiplier Multiplier::zero(AlgebraRef algebra) {
  const Index n = algebra->dimension();
  return Multiplier(std::move(algebra), Matrix(n, n), Matrix(n, n));
}

Multiplier Multiplier::from_linear_combination(AlgebraRef algebra,
                                               const std::vector<const Multiplier*>& parts,
                                               const Vec& coefficients) {
  if (parts.size() != coefficients.size()) {
    throw InputError("linear combination arity mismatch");
  }
  const Index n = algebra->dimension();
  Matrix left(n, n), right(n, n);
  for (Index t = 0; t < parts.size(); ++t) {
    if (parts[t]->algebra().get() != algebra.get()) {
      throw InputError("linear combination crosses algebras");
    }
    if (coefficients[t].is_zero()) continue;
    parts[t]->left_action().for_each_nonzero(
        [&](Index r, Index c, const Rational& v) { left.add_to(r, c, coefficients[t] * v); });
    parts[t]->right_action().for_each_nonzero(
        [&](Index r, Index c, const Rational& v) { right.add_to(r, c, coefficients[t] * v); });
  }
  return Multiplier(std::move(algebra), std::move(left), std::move(right));
}

Multiplier Multiplier::operator*(const Multiplier& o) const {
  if (algebra_.get() != o.algebra_.get()) throw InputError("multiplier product crosses algebras");
  return Multiplier(algebra_, left_ * o.left_, o.right_ * right_);
}

bool Multiplier::operator==(const Multiplier& o) const {
  return algebra_.get() == o.algebra_.get() && left_ == o.left_ && right_ == o.right_;
}

std::optional<Element> Multiplier::membership() const {
  if (!algebra_->membership_available()) {
    throw InputError("membership needs a non-degenerate idempotent algebra");
  }
  auto coords = algebra_->element_with_left_action(left_);
  if (!coords) return std::nullopt;
  if (algebra_->right_regular(*coords) != right_) return std::nullopt;
  return Element::from_coords(algebra_, std::move(*coords));
}

Multiplier left_leg(const TensorSquare& sq, const Vec& x) {
  const Index n = sq.base_dim();
  return Multiplier(sq.algebra(), sq.base()->left_regular(x).kron(Matrix::identity(n)),
                    sq.base()->right_regular(x).kron(Matrix::identity(n)));
}

Multiplier right_leg(const TensorSquare& sq, const Vec& y) {
  const Index n = sq.base_dim();
  return Multiplier(sq.algebra(), Matrix::identity(n).kron(sq.base()->left_regular(y)),
                    Matrix::identity(n).kron(sq.base()->right_regular(y)));
}

}  // namespace mhopf
