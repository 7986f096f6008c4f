#include "mhopf/algebra.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

std::string default_label(Index i) { return "e" + std::to_string(i); }

std::string render_triple(const FiniteAlgebra& a, Index i, Index j, Index k) {
  const auto& l = a.basis_labels();
  return "(" + l[i] + ", " + l[j] + ", " + l[k] + ")";
}

}  // namespace

AlgebraRef FiniteAlgebra::create(Index dimension, const std::vector<StructureTriple>& triples,
                                 std::vector<std::string> basis_labels, std::string name) {
  if (dimension == 0) throw InputError("algebra dimension must be positive");
  auto alg = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra());
  alg->dim_ = dimension;
  alg->name_ = std::move(name);
  if (basis_labels.empty()) {
    for (Index i = 0; i < dimension; ++i) basis_labels.push_back(default_label(i));
  }
  if (basis_labels.size() != dimension) {
    throw InputError("basis label count does not match the dimension");
  }
  alg->labels_ = std::move(basis_labels);

  std::map<std::pair<Index, Index>, std::map<Index, Rational>> grid;
  for (const auto& t : triples) {
    if (t.i >= dimension || t.j >= dimension || t.k >= dimension) {
      throw InputError("structure constant index out of range");
    }
    if (t.c.is_zero()) continue;
    grid[{t.i, t.j}][t.k] += t.c;
  }
  alg->table_.assign(dimension * dimension, SparseVec{});
  alg->triples_.clear();
  for (auto& [ij, terms] : grid) {
    SparseVec row;
    for (auto& [k, c] : terms) {
      if (c.is_zero()) continue;
      row.emplace_back(k, c);
      alg->triples_.push_back({ij.first, ij.second, k, c});
    }
    alg->table_[ij.first * dimension + ij.second] = std::move(row);
  }

  // Exact associativity sweep over all basis triples; fail fast with the
  // offending triple.
  for (Index i = 0; i < dimension; ++i) {
    for (Index j = 0; j < dimension; ++j) {
      const SparseVec& ij = alg->product_terms(i, j);
      for (Index k = 0; k < dimension; ++k) {
        std::map<Index, Rational> lhs, rhs;
        for (const auto& [p, c] : ij) {
          for (const auto& [r, c2] : alg->product_terms(p, k)) lhs[r] += c * c2;
        }
        for (const auto& [q, c] : alg->product_terms(j, k)) {
          for (const auto& [r, c2] : alg->product_terms(i, q)) rhs[r] += c * c2;
        }
        bool equal = true;
        for (const auto& [r, c] : lhs) {
          if (auto it = rhs.find(r); (it == rhs.end() ? Rational() : it->second) != c) {
            equal = false;
          }
        }
        for (const auto& [r, c] : rhs) {
          if (auto it = lhs.find(r); (it == lhs.end() ? Rational() : it->second) != c) {
            equal = false;
          }
        }
        if (!equal) {
          throw InputError("structure constants are not associative at basis triple " +
                           render_triple(*alg, i, j, k));
        }
      }
    }
  }

  Matrix mult(dimension, dimension * dimension);
  for (Index i = 0; i < dimension; ++i) {
    for (Index j = 0; j < dimension; ++j) {
      for (const auto& [k, c] : alg->product_terms(i, j)) {
        mult.set(k, pair_index(i, j, dimension), c);
      }
    }
  }
  alg->mult_matrix_ = std::move(mult);
  alg->idempotent_ = rank(alg->mult_matrix_) == dimension;

  // Non-degeneracy: trivial kernels for x |-> (x e_j)_j and x |-> (e_i x)_i.
  {
    const Index n = dimension;
    Matrix left_system(n * n, n);   // rows (j, k): sum_i c(i,j,k) x_i = 0
    Matrix right_system(n * n, n);  // rows (i, k): sum_j c(i,j,k) x_j = 0
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        for (const auto& [k, c] : alg->product_terms(i, j)) {
          left_system.add_to(j * n + k, i, c);
          right_system.add_to(i * n + k, j, c);
        }
      }
    }
    auto left_kernel = kernel_basis(left_system);
    auto right_kernel = kernel_basis(right_system);
    if (!left_kernel.empty()) {
      alg->nondeg_ = CheckResult::fail(Witness{{0}, left_kernel.front()});
    } else if (!right_kernel.empty()) {
      alg->nondeg_ = CheckResult::fail(Witness{{1}, right_kernel.front()});
    } else {
      alg->nondeg_ = CheckResult::pass();
    }
  }

  // Membership support: a full-rank row selection of the defining system
  // L(a) = given.  Row (j, k) has coefficients c(i, j, k) over the unknown a.
  if (alg->nondeg_.passed() && alg->idempotent_) {
    const Index n = dimension;
    std::vector<Vec> reduced;
    std::vector<Index> lead;
    std::vector<std::pair<Index, Index>> chosen;
    for (Index j = 0; j < n && chosen.size() < n; ++j) {
      for (Index k = 0; k < n && chosen.size() < n; ++k) {
        Vec row(n);
        bool nonzero = false;
        for (Index i = 0; i < n; ++i) {
          for (const auto& [kk, c] : alg->product_terms(i, j)) {
            if (kk == k) {
              row[i] += c;
              if (!row[i].is_zero()) nonzero = true;
            }
          }
        }
        if (!nonzero) continue;
        Vec work = row;
        for (Index t = 0; t < reduced.size(); ++t) {
          if (!work[lead[t]].is_zero()) {
            Rational f = work[lead[t]] / reduced[t][lead[t]];
            for (Index c = 0; c < n; ++c) work[c] -= f * reduced[t][c];
          }
        }
        Index pivot = n;
        for (Index c = 0; c < n; ++c) {
          if (!work[c].is_zero()) {
            pivot = c;
            break;
          }
        }
        if (pivot == n) continue;
        reduced.push_back(std::move(work));
        lead.push_back(pivot);
        chosen.emplace_back(j, k);
      }
    }
    if (chosen.size() == n) {
      Matrix selection(n, n);
      for (Index t = 0; t < n; ++t) {
        const auto [j, k] = chosen[t];
        for (Index i = 0; i < n; ++i) {
          for (const auto& [kk, c] : alg->product_terms(i, j)) {
            if (kk == k) selection.add_to(t, i, c);
          }
        }
      }
      auto inv = invert(selection);
      if (!inv) throw LogicBug("independent row selection failed to invert");
      alg->membership_inverse_ = std::move(*inv);
      alg->membership_rows_ = std::move(chosen);
    }
  }

  return alg;
}

const SparseVec& FiniteAlgebra::product_terms(Index i, Index j) const {
  return table_[i * dim_ + j];
}

Vec FiniteAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("element size mismatch");
  Vec out(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational f = x[i] * y[j];
      for (const auto& [k, c] : product_terms(i, j)) out[k] += f * c;
    }
  }
  return out;
}

Vec FiniteAlgebra::multiply_opposite(const Vec& x, const Vec& y) const {
  return multiply(y, x);
}

Matrix FiniteAlgebra::left_regular(const Vec& x) const {
  if (x.size() != dim_) throw InputError("element size mismatch");
  Matrix m(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : product_terms(i, j)) m.add_to(k, j, x[i] * c);
    }
  }
  return m;
}

Matrix FiniteAlgebra::right_regular(const Vec& x) const {
  if (x.size() != dim_) throw InputError("element size mismatch");
  Matrix m(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : product_terms(j, i)) m.add_to(k, j, x[i] * c);
    }
  }
  return m;
}

CheckResult FiniteAlgebra::idempotency_check() const {
  if (idempotent_) return CheckResult::pass();
  auto functional = kernel_basis(mult_matrix_.transpose());
  Witness w;
  if (!functional.empty()) w.residual = functional.front();
  return CheckResult::fail(std::move(w));
}

AlgebraRef FiniteAlgebra::opposite() const {
  std::vector<StructureTriple> swapped;
  swapped.reserve(triples_.size());
  for (const auto& t : triples_) swapped.push_back({t.j, t.i, t.k, t.c});
  return create(dim_, swapped, labels_, name_.empty() ? "opposite" : name_ + "^op");
}

std::optional<Vec> FiniteAlgebra::element_with_left_action(const Matrix& left_action) const {
  if (!membership_available()) {
    throw InputError("membership needs a non-degenerate idempotent algebra");
  }
  if (left_action.rows() != dim_ || left_action.cols() != dim_) {
    throw InputError("left action shape mismatch");
  }
  Vec rhs(dim_);
  for (Index t = 0; t < dim_; ++t) {
    const auto [j, k] = membership_rows_[t];
    rhs[t] = left_action.at(k, j);
  }
  Vec candidate = membership_inverse_->apply(rhs);
  if (left_regular(candidate) != left_action) return std::nullopt;
  return candidate;
}

Element Element::basis(const AlgebraRef& a, Index i) {
  Vec v(a->dimension());
  v[i] = 1;
  return {a, std::move(v)};
}

Element Element::zero(const AlgebraRef& a) { return {a, Vec(a->dimension())}; }

Element Element::from_coords(const AlgebraRef& a, Vec coords) {
  if (coords.size() != a->dimension()) throw InputError("element size mismatch");
  return {a, std::move(coords)};
}

Element multiply(const Element& x, const Element& y) {
  if (x.algebra.get() != y.algebra.get()) throw InputError("mismatched algebras");
  return {x.algebra, x.algebra->multiply(x.coords, y.coords)};
}

Element multiply_opposite(const Element& x, const Element& y) {
  if (x.algebra.get() != y.algebra.get()) throw InputError("mismatched algebras");
  return {x.algebra, x.algebra->multiply_opposite(x.coords, y.coords)};
}

TensorSquare TensorSquare::build(const AlgebraRef& base, Index max_dim) {
  if (base->dimension() > max_dim) {
    throw InputError("dimension guard exceeded: " + std::to_string(base->dimension()) +
                     " > " + std::to_string(max_dim));
  }
  const Index n = base->dimension();
  std::vector<StructureTriple> triples;
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      const SparseVec& left = base->product_terms(i, k);
      if (left.empty()) continue;
      for (Index j = 0; j < n; ++j) {
        for (Index l = 0; l < n; ++l) {
          const SparseVec& right = base->product_terms(j, l);
          if (right.empty()) continue;
          for (const auto& [a, ca] : left) {
            for (const auto& [b, cb] : right) {
              triples.push_back({pair_index(i, j, n), pair_index(k, l, n),
                                 pair_index(a, b, n), ca * cb});
            }
          }
        }
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      labels.push_back(base->basis_labels()[i] + "⊗" + base->basis_labels()[j]);
    }
  }
  TensorSquare sq;
  sq.base_ = base;
  sq.n_ = n;
  sq.algebra_ = FiniteAlgebra::create(
      n * n, triples, std::move(labels),
      base->name().empty() ? "tensor-square" : base->name() + "⊗" + base->name());
  std::vector<Index> image(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) image[pair_index(i, j, n)] = pair_index(j, i, n);
  }
  sq.flip_ = Matrix::permutation(image);
  return sq;
}

Vec TensorSquare::tensor(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw InputError("tensor factor size mismatch");
  Vec out(n_ * n_);
  for (Index i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < n_; ++j) {
      if (!y[j].is_zero()) out[pair_index(i, j, n_)] = x[i] * y[j];
    }
  }
  return out;
}

CheckResult local_units_left(const FiniteAlgebra& a) {
  const Index n = a.dimension();
  for (Index b = 0; b < n; ++b) {
    std::vector<Vec> gens;
    gens.reserve(n);
    Vec eb(n);
    eb[b] = 1;
    for (Index i = 0; i < n; ++i) {
      Vec ei(n);
      ei[i] = 1;
      gens.push_back(a.multiply(ei, eb));
    }
    if (!membership_in_span(eb, gens)) {
      return CheckResult::fail(Witness{{b}, eb});
    }
  }
  return CheckResult::pass();
}

CheckResult local_units_right(const FiniteAlgebra& a) {
  const Index n = a.dimension();
  for (Index b = 0; b < n; ++b) {
    std::vector<Vec> gens;
    gens.reserve(n);
    Vec eb(n);
    eb[b] = 1;
    for (Index i = 0; i < n; ++i) {
      Vec ei(n);
      ei[i] = 1;
      gens.push_back(a.multiply(eb, ei));
    }
    if (!membership_in_span(eb, gens)) {
      return CheckResult::fail(Witness{{b}, eb});
    }
  }
  return CheckResult::pass();
}

CommonUnit local_unit_common(const FiniteAlgebra& a) {
  const Index n = a.dimension();
  // Rows (0, i, k): sum_j u_j c(j, i, k) = [k == i]; rows (1, i, k) mirror.
  Matrix system(2 * n * n, n);
  Vec rhs(2 * n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.product_terms(j, i)) system.add_to(i * n + k, j, c);
      for (const auto& [k, c] : a.product_terms(i, j)) {
        system.add_to(n * n + i * n + k, j, c);
      }
    }
    rhs[i * n + i] = 1;
    rhs[n * n + i * n + i] = 1;
  }
  auto u = solve(system, rhs);
  if (!u) return {CheckResult::fail(Witness{}), std::nullopt};
  return {CheckResult::pass(), std::move(*u)};
}

}  // namespace mhopf
