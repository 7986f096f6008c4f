#include "mhopf/coproduct.hpp"

#include <map>
#include <utility>

#include "mhopf/error.hpp"

namespace mhopf {

Coproduct Coproduct::element_valued(TensorSquare square, std::vector<Vec> tensors) {
  const Index n = square.base_dim();
  if (tensors.size() != n) throw InputError("coproduct value count does not match dimension");
  std::vector<Multiplier> values;
  values.reserve(n);
  for (const Vec& t : tensors) {
    if (t.size() != n * n) throw InputError("coproduct tensor has the wrong size");
    values.push_back(Multiplier::embed(Element::from_coords(square.algebra(), t)));
  }
  return Coproduct(std::move(square), std::move(values), CoproductKind::element,
                   std::move(tensors));
}

Coproduct Coproduct::multiplier_valued(TensorSquare square,
                                       std::vector<std::pair<Matrix, Matrix>> actions) {
  const Index n = square.base_dim();
  if (actions.size() != n) throw InputError("coproduct value count does not match dimension");
  std::vector<Multiplier> values;
  values.reserve(n);
  for (auto& [left, right] : actions) {
    values.push_back(Multiplier::verified(square.algebra(), std::move(left), std::move(right)));
  }
  return Coproduct(std::move(square), std::move(values), CoproductKind::multiplier, std::nullopt);
}

Multiplier Coproduct::of(const Vec& x) const {
  if (x.size() != base_dim()) throw InputError("element size mismatch");
  std::vector<const Multiplier*> parts;
  parts.reserve(values_.size());
  for (const Multiplier& v : values_) parts.push_back(&v);
  return Multiplier::from_linear_combination(square_.algebra(), parts, x);
}

Coproduct Coproduct::coopposite() const {
  const Matrix& f = square_.flip();
  if (tensors_) {
    std::vector<Vec> flipped;
    flipped.reserve(tensors_->size());
    for (const Vec& t : *tensors_) flipped.push_back(f.apply(t));
    return element_valued(square_, std::move(flipped));
  }
  std::vector<std::pair<Matrix, Matrix>> actions;
  actions.reserve(values_.size());
  for (const Multiplier& v : values_) {
    actions.emplace_back(f * v.left_action() * f, f * v.right_action() * f);
  }
  return multiplier_valued(square_, std::move(actions));
}

Coproduct Coproduct::opposite_reduction() const {
  AlgebraRef base_op = base()->opposite();
  TensorSquare square_op = TensorSquare::build(base_op, base_op->dimension());
  if (tensors_) return element_valued(std::move(square_op), *tensors_);
  std::vector<std::pair<Matrix, Matrix>> actions;
  actions.reserve(values_.size());
  for (const Multiplier& v : values_) {
    actions.emplace_back(v.right_action(), v.left_action());
  }
  return multiplier_valued(std::move(square_op), std::move(actions));
}

CanonicalOperator canonical_map(const Coproduct& d, CanonicalWhich which) {
  const Index n = d.base_dim();
  const Index dim = n * n;
  CanonicalOperator op;
  op.which = which;
  std::vector<Vec> cols(dim);
  for (Index first = 0; first < dim && !op.irregularity; ++first) {
    const auto [i, j] = split_pair(first, n);
    Vec ei(n), ej(n);
    ei[i] = 1;
    ej[j] = 1;
    std::optional<Element> image;
    switch (which) {
      case CanonicalWhich::t1:  // D(e_i)(1 (x) e_j)
        image = (d.value(i) * right_leg(d.square(), ej)).membership();
        break;
      case CanonicalWhich::t2:  // (e_i (x) 1) D(e_j)
        image = (left_leg(d.square(), ei) * d.value(j)).membership();
        break;
      case CanonicalWhich::t3:  // (1 (x) e_j) D(e_i)
        image = (right_leg(d.square(), ej) * d.value(i)).membership();
        break;
      case CanonicalWhich::t4:  // D(e_j)(e_i (x) 1)
        image = (d.value(j) * left_leg(d.square(), ei)).membership();
        break;
    }
    if (!image) {
      op.irregularity = Witness{{i, j}, {}};
      break;
    }
    cols[first] = std::move(image->coords);
  }
  if (op.irregularity) return op;
  op.regular = true;
  op.matrix = Matrix::from_columns(dim, cols);
  auto inv = invert(*op.matrix);
  if (inv) {
    op.bijective = true;
    op.inverse = std::move(*inv);
  } else {
    auto kernel = kernel_basis(*op.matrix);
    if (kernel.empty()) throw LogicBug("singular square matrix with empty kernel");
    op.kernel_vector = kernel.front();
  }
  return op;
}

CheckResult check_homomorphism(const Coproduct& d) {
  const Index n = d.base_dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vec product(n);
      for (const auto& [k, c] : d.base()->product_terms(i, j)) product[k] = c;
      Multiplier lhs = d.of(product);
      Multiplier rhs = d.value(i) * d.value(j);
      if (lhs != rhs) {
        Matrix diff = lhs.left_action() - rhs.left_action();
        if (diff.is_zero()) diff = lhs.right_action() - rhs.right_action();
        Witness w{{i, j}, {}};
        diff.for_each_nonzero([&](Index, Index c, const Rational&) {
          if (w.residual.empty()) w.residual = diff.column_dense(c);
        });
        return CheckResult::fail(std::move(w));
      }
    }
  }
  return CheckResult::pass();
}

namespace {

using TripleTensor = std::map<Index, Rational>;

void accumulate(TripleTensor& out, Index key, const Rational& v) {
  auto it = out.find(key);
  if (it == out.end()) {
    if (!v.is_zero()) out.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) out.erase(it);
}

bool triple_equal(const TripleTensor& a, const TripleTensor& b) { return a == b; }

Vec triple_difference(const TripleTensor& a, const TripleTensor& b, Index size) {
  Vec diff(size);
  for (const auto& [k, v] : a) diff[k] += v;
  for (const auto& [k, v] : b) diff[k] -= v;
  return diff;
}

}  // namespace

CheckResult check_coassoc_left(const Coproduct& d, const CanonicalOperator& t1,
                               const CanonicalOperator& t4) {
  if (!t1.regular || !t4.regular) return CheckResult::skipped();
  const Index n = d.base_dim();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const SparseVec x = t1.matrix->column(pair_index(a, b, n));
      for (Index c = 0; c < n; ++c) {
        // Left route: expand the first leg of T1(a (x) b) through T4(c (x) .).
        TripleTensor lhs;
        for (const auto& [pq, xv] : x) {
          const auto [p, q] = split_pair(pq, n);
          for (const auto& [uv, yv] : t4.matrix->column(pair_index(c, p, n))) {
            const auto [u, v] = split_pair(uv, n);
            accumulate(lhs, triple_index(u, v, q, n), xv * yv);
          }
        }
        // Right route: expand the second leg of T4(c (x) a) through T1(. (x) b).
        TripleTensor rhs;
        for (const auto& [pq, yv] : t4.matrix->column(pair_index(c, a, n))) {
          const auto [p, q] = split_pair(pq, n);
          for (const auto& [uv, xv] : t1.matrix->column(pair_index(q, b, n))) {
            const auto [u, v] = split_pair(uv, n);
            accumulate(rhs, triple_index(p, u, v, n), yv * xv);
          }
        }
        if (!triple_equal(lhs, rhs)) {
          return CheckResult::fail(Witness{{a, b, c}, triple_difference(lhs, rhs, n * n * n)});
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_coassoc_right(const Coproduct& d, const CanonicalOperator& t2,
                                const CanonicalOperator& t3) {
  if (!t2.regular || !t3.regular) return CheckResult::skipped();
  const Index n = d.base_dim();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const SparseVec x = t3.matrix->column(pair_index(a, b, n));
      for (Index c = 0; c < n; ++c) {
        // Left route: expand the second leg of T2(c (x) a) through T3(. (x) b).
        TripleTensor lhs;
        for (const auto& [pq, yv] : t2.matrix->column(pair_index(c, a, n))) {
          const auto [p, q] = split_pair(pq, n);
          for (const auto& [uv, xv] : t3.matrix->column(pair_index(q, b, n))) {
            const auto [u, v] = split_pair(uv, n);
            accumulate(lhs, triple_index(p, u, v, n), yv * xv);
          }
        }
        // Right route: expand the first leg of T3(a (x) b) through T2(c (x) .).
        TripleTensor rhs;
        for (const auto& [pq, xv] : x) {
          const auto [p, q] = split_pair(pq, n);
          for (const auto& [uv, yv] : t2.matrix->column(pair_index(c, p, n))) {
            const auto [u, v] = split_pair(uv, n);
            accumulate(rhs, triple_index(u, v, q, n), xv * yv);
          }
        }
        if (!triple_equal(lhs, rhs)) {
          return CheckResult::fail(Witness{{a, b, c}, triple_difference(lhs, rhs, n * n * n)});
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_pentagon(const Coproduct& d, const CanonicalOperator& t1) {
  if (!t1.regular) return CheckResult::skipped();
  const Index n = d.base_dim();
  const Matrix& t = *t1.matrix;
  const Matrix eye = Matrix::identity(n);
  const Matrix t12 = t.kron(eye);
  const Matrix t23 = eye.kron(t);
  const Matrix f23 = eye.kron(d.square().flip());
  const Matrix t13 = f23 * t12 * f23;
  const Matrix lhs = t23 * t12;
  const Matrix rhs = t12 * t13 * t23;
  if (lhs == rhs) return CheckResult::pass();
  const Matrix diff = lhs - rhs;
  Witness w;
  diff.for_each_nonzero([&](Index, Index c, const Rational&) {
    if (w.indices.empty()) {
      w.indices = {c};
      w.residual = diff.column_dense(c);
    }
  });
  return CheckResult::fail(std::move(w));
}

CheckResult check_fullness(const Coproduct& d, const CanonicalOperator& t1,
                           const CanonicalOperator& t4) {
  if (!t1.regular || !t4.regular) return CheckResult::skipped();
  const Index n = d.base_dim();
  // Left-leg slices of the T1 images and right-leg slices of the T4 images.
  Matrix left_slices(n, n * n * n);
  Matrix right_slices(n, n * n * n);
  t1.matrix->for_each_nonzero([&](Index pq, Index col, const Rational& v) {
    const auto [p, q] = split_pair(pq, n);
    left_slices.add_to(p, col * n + q, v);
  });
  t4.matrix->for_each_nonzero([&](Index pq, Index col, const Rational& v) {
    const auto [p, q] = split_pair(pq, n);
    right_slices.add_to(q, col * n + p, v);
  });
  if (rank(left_slices) < n) {
    auto functional = kernel_basis(left_slices.transpose());
    Witness w{{0}, functional.empty() ? Vec{} : functional.front()};
    return CheckResult::fail(std::move(w));
  }
  if (rank(right_slices) < n) {
    auto functional = kernel_basis(right_slices.transpose());
    Witness w{{1}, functional.empty() ? Vec{} : functional.front()};
    return CheckResult::fail(std::move(w));
  }
  return CheckResult::pass();
}

AxiomRun run_axioms(const Coproduct& d) {
  AxiomRun run;
  run.nondegenerate = d.base()->nondegenerate();
  run.idempotent = d.base()->idempotency_check();
  for (Index t = 0; t < 4; ++t) {
    run.maps[t].which = static_cast<CanonicalWhich>(t + 1);
    run.regular[t] = CheckResult::skipped();
    run.bijective[t] = CheckResult::skipped();
  }
  run.homomorphism = CheckResult::skipped();
  run.coassoc_left = CheckResult::skipped();
  run.coassoc_right = CheckResult::skipped();
  run.pentagon = CheckResult::skipped();
  run.fullness = CheckResult::skipped();

  const bool foundation = run.nondegenerate.passed() && run.idempotent.passed();
  if (foundation) {
    run.homomorphism = check_homomorphism(d);
    for (Index t = 0; t < 4; ++t) {
      run.maps[t] = canonical_map(d, static_cast<CanonicalWhich>(t + 1));
      run.regular[t] = run.maps[t].regular
                           ? CheckResult::pass()
                           : CheckResult::fail(*run.maps[t].irregularity);
      if (!run.maps[t].regular) {
        run.bijective[t] = CheckResult::skipped();
      } else if (run.maps[t].bijective) {
        run.bijective[t] = CheckResult::pass();
      } else {
        run.bijective[t] = CheckResult::fail(Witness{{}, *run.maps[t].kernel_vector});
      }
    }
    run.coassoc_left = check_coassoc_left(d, run.maps[0], run.maps[3]);
    run.coassoc_right = check_coassoc_right(d, run.maps[1], run.maps[2]);
    if (run.homomorphism.passed() && run.maps[0].regular && run.maps[3].regular &&
        run.coassoc_left.passed()) {
      run.pentagon = check_pentagon(d, run.maps[0]);
    }
    if (run.maps[0].regular && run.maps[3].regular) {
      run.fullness = check_fullness(d, run.maps[0], run.maps[3]);
    }
  }

  finalize_classification(run);
  return run;
}

void finalize_classification(AxiomRun& run) {
  auto all_passed = [](std::initializer_list<const CheckResult*> rs) {
    for (const CheckResult* r : rs) {
      if (!r->passed()) return false;
    }
    return true;
  };
  Classification cls;
  cls.is_left = all_passed({&run.nondegenerate, &run.idempotent, &run.homomorphism,
                            &run.regular[0], &run.regular[3], &run.coassoc_left,
                            &run.bijective[0], &run.bijective[3]});
  cls.is_right = all_passed({&run.nondegenerate, &run.idempotent, &run.homomorphism,
                             &run.regular[1], &run.regular[2], &run.coassoc_right,
                             &run.bijective[1], &run.bijective[2]});
  cls.is_regular = cls.is_left && cls.is_right;

  const std::pair<const char*, const CheckResult*> ordered[] = {
      {"nondegenerate", &run.nondegenerate},
      {"idempotent", &run.idempotent},
      {"homomorphism", &run.homomorphism},
      {"t1_regular", &run.regular[0]},
      {"t2_regular", &run.regular[1]},
      {"t3_regular", &run.regular[2]},
      {"t4_regular", &run.regular[3]},
      {"coassoc_left", &run.coassoc_left},
      {"coassoc_right", &run.coassoc_right},
      {"t1_bijective", &run.bijective[0]},
      {"t2_bijective", &run.bijective[1]},
      {"t3_bijective", &run.bijective[2]},
      {"t4_bijective", &run.bijective[3]},
      {"pentagon", &run.pentagon},
      {"fullness", &run.fullness},
  };
  for (const auto& [label, result] : ordered) {
    if (result->failed()) {
      cls.first_failure = label;
      break;
    }
  }
  run.classification = std::move(cls);
}

Classification classify(const Coproduct& d) { return run_axioms(d).classification; }

}  // namespace mhopf
