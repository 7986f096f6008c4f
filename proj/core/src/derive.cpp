#include "mhopf/derive.hpp"

#include <string>
#include <utility>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

Vec basis_vec(Index n, Index i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Extracts the scalar lambda with column_map == lambda * identity, or reports
// the offending column.
std::optional<Rational> scalar_of(const Matrix& m) {
  const Index n = m.rows();
  Rational lambda = m.at(0, 0);
  for (Index c = 0; c < n; ++c) {
    for (Index r = 0; r < n; ++r) {
      const Rational expected = r == c ? lambda : Rational();
      if (m.at(r, c) != expected) return std::nullopt;
    }
  }
  return lambda;
}

const Matrix& require_inverse(const CanonicalOperator& op, const char* who) {
  if (!op.inverse) {
    throw DerivationError("rank-deficient", Witness{},
                          std::string(who) + " needs a bijective canonical map");
  }
  return *op.inverse;
}

}  // namespace

Counit derive_counit_left(const Coproduct& d, const CanonicalOperator& t1) {
  const Index n = d.base_dim();
  const Matrix& inv = require_inverse(t1, "counit extraction");
  const Matrix& mult = d.base()->multiplication_matrix();
  Counit eps;
  eps.provenance = Counit::From::t1;
  eps.functional.coords.assign(n, Rational());
  for (Index i = 0; i < n; ++i) {
    Matrix action(n, n);
    for (Index b = 0; b < n; ++b) {
      Vec col = mult.apply(inv.column_dense(pair_index(i, b, n)));
      for (Index r = 0; r < n; ++r) {
        if (!col[r].is_zero()) action.set(r, b, col[r]);
      }
    }
    auto lambda = scalar_of(action);
    if (!lambda) {
      throw DerivationError("not-scalar", Witness{{i}, action.column_dense(0)},
                            "multiplying back a first-map preimage is not scalar on basis " +
                                d.base()->basis_labels()[i]);
    }
    eps.functional.coords[i] = *lambda;
  }
  return eps;
}

Counit derive_counit_right(const Coproduct& d, const CanonicalOperator& t4) {
  const Index n = d.base_dim();
  const Matrix& inv = require_inverse(t4, "counit extraction");
  const Matrix& mult = d.base()->multiplication_matrix();
  const Matrix& flip = d.square().flip();
  Counit eps;
  eps.provenance = Counit::From::t4;
  eps.functional.coords.assign(n, Rational());
  for (Index i = 0; i < n; ++i) {
    Matrix action(n, n);
    for (Index c = 0; c < n; ++c) {
      Vec col = mult.apply(flip.apply(inv.column_dense(pair_index(c, i, n))));
      for (Index r = 0; r < n; ++r) {
        if (!col[r].is_zero()) action.set(r, c, col[r]);
      }
    }
    auto lambda = scalar_of(action);
    if (!lambda) {
      throw DerivationError("not-scalar", Witness{{i}, action.column_dense(0)},
                            "multiplying back a fourth-map preimage is not scalar on basis " +
                                d.base()->basis_labels()[i]);
    }
    eps.functional.coords[i] = *lambda;
  }
  return eps;
}

CheckResult counit_match(const Counit& left, const Counit& right) {
  const Vec& a = left.functional.coords;
  const Vec& b = right.functional.coords;
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      return CheckResult::fail(Witness{{i}, vec_sub(a, b)});
    }
  }
  return CheckResult::pass();
}

CheckResult counit_identity_t1(const Coproduct& d, const CanonicalOperator& t1,
                               const Counit& eps) {
  if (!t1.matrix) return CheckResult::skipped();
  const Index n = d.base_dim();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      Vec lhs(n);
      for (const auto& [pq, v] : t1.matrix->column(pair_index(a, b, n))) {
        const auto [p, q] = split_pair(pq, n);
        lhs[q] += eps.functional.coords[p] * v;
      }
      Vec rhs(n);
      for (const auto& [k, c] : d.base()->product_terms(a, b)) rhs[k] = c;
      if (lhs != rhs) {
        return CheckResult::fail(Witness{{a, b}, vec_sub(lhs, rhs)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult counit_identity_t4(const Coproduct& d, const CanonicalOperator& t4,
                               const Counit& eps) {
  if (!t4.matrix) return CheckResult::skipped();
  const Index n = d.base_dim();
  for (Index c = 0; c < n; ++c) {
    for (Index a = 0; a < n; ++a) {
      Vec lhs(n);
      for (const auto& [pq, v] : t4.matrix->column(pair_index(c, a, n))) {
        const auto [p, q] = split_pair(pq, n);
        lhs[p] += eps.functional.coords[q] * v;
      }
      Vec rhs(n);
      for (const auto& [k, cc] : d.base()->product_terms(a, c)) rhs[k] = cc;
      if (lhs != rhs) {
        return CheckResult::fail(Witness{{c, a}, vec_sub(lhs, rhs)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult counit_homomorphism(const Coproduct& d, const Counit& eps) {
  const Index n = d.base_dim();
  const Vec& e = eps.functional.coords;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Rational lhs;
      for (const auto& [k, c] : d.base()->product_terms(i, j)) lhs += c * e[k];
      const Rational rhs = e[i] * e[j];
      if (lhs != rhs) {
        return CheckResult::fail(Witness{{i, j}, {lhs - rhs}});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult counit_uniqueness(const Coproduct& d, const CanonicalOperator& t1) {
  if (!t1.matrix) return CheckResult::skipped();
  const Index n = d.base_dim();
  // Homogeneous part of (f (x) i)T1(a (x) b) = ab over the unknown functional f.
  Matrix system(n * n * n, n);
  t1.matrix->for_each_nonzero([&](Index pq, Index col, const Rational& v) {
    const auto [p, q] = split_pair(pq, n);
    system.add_to(col * n + q, p, v);
  });
  auto kernel = kernel_basis(system);
  if (!kernel.empty()) {
    return CheckResult::fail(Witness{{}, kernel.front()});
  }
  return CheckResult::pass();
}

Antipode derive_antipode(const Coproduct& d, const Counit& eps, const CanonicalOperator& t1,
                         const CanonicalOperator& t4) {
  const Index n = d.base_dim();
  const Matrix& inv1 = require_inverse(t1, "antipode extraction");
  const Matrix& inv4 = require_inverse(t4, "antipode extraction");
  const Vec& e = eps.functional.coords;

  std::vector<Vec> s_cols(n);
  for (Index i = 0; i < n; ++i) {
    // b |-> (eps (x) i) T1^{-1}(e_i (x) b) is left multiplication by S(e_i).
    Matrix left(n, n);
    for (Index b = 0; b < n; ++b) {
      for (const auto& [pq, v] : inv1.column(pair_index(i, b, n))) {
        const auto [p, q] = split_pair(pq, n);
        left.add_to(q, b, e[p] * v);
      }
    }
    auto elem = d.base()->element_with_left_action(left);
    if (!elem) {
      throw DerivationError("membership-failure", Witness{{i}, {}},
                            "antipode value on basis " + d.base()->basis_labels()[i] +
                                " acts from the left but is not an algebra element");
    }
    s_cols[i] = std::move(*elem);
  }

  std::vector<Vec> sp_cols(n);
  for (Index i = 0; i < n; ++i) {
    // c |-> (i (x) eps) T4^{-1}(c (x) e_i) is again left multiplication, this
    // time by S'(e_i).
    Matrix left(n, n);
    for (Index c = 0; c < n; ++c) {
      for (const auto& [pq, v] : inv4.column(pair_index(c, i, n))) {
        const auto [p, q] = split_pair(pq, n);
        left.add_to(p, c, e[q] * v);
      }
    }
    auto elem = d.base()->element_with_left_action(left);
    if (!elem) {
      throw DerivationError("inverse-membership-failure", Witness{{i}, {}},
                            "inverse antipode value on basis " + d.base()->basis_labels()[i] +
                                " acts from the left but is not an algebra element");
    }
    sp_cols[i] = std::move(*elem);
  }

  Antipode s;
  s.map = Matrix::from_columns(n, s_cols);
  s.inverse = Matrix::from_columns(n, sp_cols);
  const Matrix eye = Matrix::identity(n);
  if (s.map * s.inverse != eye || s.inverse * s.map != eye) {
    Matrix diff = s.map * s.inverse - eye;
    if (diff.is_zero()) diff = s.inverse * s.map - eye;
    Witness w;
    diff.for_each_nonzero([&](Index, Index c, const Rational&) {
      if (w.indices.empty()) {
        w.indices = {c};
        w.residual = diff.column_dense(c);
      }
    });
    throw DerivationError("inverse-mismatch", std::move(w),
                          "the two one-sided antipodes are not mutually inverse");
  }
  return s;
}

CheckResult antipode_image_spans(const Coproduct& d, const Antipode& s) {
  const Index n = d.base_dim();
  Matrix span(n, n * n);
  for (Index i = 0; i < n; ++i) {
    const Vec si = s.map.column_dense(i);
    for (Index j = 0; j < n; ++j) {
      Vec prod = d.base()->multiply(si, basis_vec(n, j));
      for (Index r = 0; r < n; ++r) {
        if (!prod[r].is_zero()) span.add_to(r, pair_index(i, j, n), prod[r]);
      }
    }
  }
  if (rank(span) < n) {
    auto functional = kernel_basis(span.transpose());
    return CheckResult::fail(Witness{{}, functional.empty() ? Vec{} : functional.front()});
  }
  return CheckResult::pass();
}

CheckResult antipode_cancellation_t1(const Coproduct& d, const Counit& eps, const Antipode& s,
                                     const CanonicalOperator& t1, const CanonicalOperator& t4) {
  if (!t1.inverse || !t4.matrix) return CheckResult::skipped();
  const Index n = d.base_dim();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const SparseVec pre = t1.inverse->column(pair_index(a, b, n));
      // m T1^{-1}(a (x) b) = eps(a) b.
      Vec collapsed(n);
      for (const auto& [pq, v] : pre) {
        const auto [p, q] = split_pair(pq, n);
        for (const auto& [k, c] : d.base()->product_terms(p, q)) collapsed[k] += v * c;
      }
      Vec want = vec_scale(eps.functional.coords[a], basis_vec(n, b));
      if (collapsed != want) {
        return CheckResult::fail(Witness{{a, b}, vec_sub(collapsed, want)});
      }
      for (Index c = 0; c < n; ++c) {
        // (i (x) S)(T4(c (x) a)) (1 (x) b) = T1^{-1}(a (x) b) (c (x) 1).
        std::map<Index, Rational> lhs, rhs;
        for (const auto& [pq, v] : t4.matrix->column(pair_index(c, a, n))) {
          const auto [p, q] = split_pair(pq, n);
          const Vec w = d.base()->multiply(s.map.column_dense(q), basis_vec(n, b));
          for (Index r = 0; r < n; ++r) {
            if (!w[r].is_zero()) lhs[pair_index(p, r, n)] += v * w[r];
          }
        }
        for (const auto& [pq, v] : pre) {
          const auto [p, q] = split_pair(pq, n);
          for (const auto& [r, cc] : d.base()->product_terms(p, c)) {
            rhs[pair_index(r, q, n)] += v * cc;
          }
        }
        for (auto it = lhs.begin(); it != lhs.end();) {
          it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
        }
        for (auto it = rhs.begin(); it != rhs.end();) {
          it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
        }
        if (lhs != rhs) {
          Vec diff(n * n);
          for (const auto& [k, v] : lhs) diff[k] += v;
          for (const auto& [k, v] : rhs) diff[k] -= v;
          return CheckResult::fail(Witness{{a, b, c}, std::move(diff)});
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult antipode_cancellation_t1_swapped(const Coproduct& d, const Counit& eps,
                                             const Antipode& s, const CanonicalOperator& t1) {
  if (!t1.matrix) return CheckResult::skipped();
  const Index n = d.base_dim();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      Vec lhs(n);
      for (const auto& [pq, v] : t1.matrix->column(pair_index(a, b, n))) {
        const auto [p, q] = split_pair(pq, n);
        const Vec w = d.base()->multiply(s.map.column_dense(p), basis_vec(n, q));
        for (Index r = 0; r < n; ++r) lhs[r] += v * w[r];
      }
      Vec want = vec_scale(eps.functional.coords[a], basis_vec(n, b));
      if (lhs != want) {
        return CheckResult::fail(Witness{{a, b}, vec_sub(lhs, want)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult antipode_cancellation_t4(const Coproduct& d, const Counit& eps, const Antipode& s,
                                     const CanonicalOperator& t1, const CanonicalOperator& t4) {
  if (!t4.inverse || !t1.matrix) return CheckResult::skipped();
  const Index n = d.base_dim();
  for (Index c = 0; c < n; ++c) {
    for (Index a = 0; a < n; ++a) {
      const SparseVec pre = t4.inverse->column(pair_index(c, a, n));
      // m-op T4^{-1}(c (x) a) = eps(a) c.
      Vec collapsed(n);
      for (const auto& [pq, v] : pre) {
        const auto [p, q] = split_pair(pq, n);
        for (const auto& [k, cc] : d.base()->product_terms(q, p)) collapsed[k] += v * cc;
      }
      Vec want = vec_scale(eps.functional.coords[a], basis_vec(n, c));
      if (collapsed != want) {
        return CheckResult::fail(Witness{{c, a}, vec_sub(collapsed, want)});
      }
      for (Index b = 0; b < n; ++b) {
        // (S' (x) i)(T1(a (x) b)) (c (x) 1) = T4^{-1}(c (x) a) (1 (x) b).
        std::map<Index, Rational> lhs, rhs;
        for (const auto& [pq, v] : t1.matrix->column(pair_index(a, b, n))) {
          const auto [p, q] = split_pair(pq, n);
          const Vec w = d.base()->multiply(s.inverse.column_dense(p), basis_vec(n, c));
          for (Index r = 0; r < n; ++r) {
            if (!w[r].is_zero()) lhs[pair_index(r, q, n)] += v * w[r];
          }
        }
        for (const auto& [pq, v] : pre) {
          const auto [p, q] = split_pair(pq, n);
          for (const auto& [r, cc] : d.base()->product_terms(q, b)) {
            rhs[pair_index(p, r, n)] += v * cc;
          }
        }
        for (auto it = lhs.begin(); it != lhs.end();) {
          it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
        }
        for (auto it = rhs.begin(); it != rhs.end();) {
          it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
        }
        if (lhs != rhs) {
          Vec diff(n * n);
          for (const auto& [k, v] : lhs) diff[k] += v;
          for (const auto& [k, v] : rhs) diff[k] -= v;
          return CheckResult::fail(Witness{{c, a, b}, std::move(diff)});
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult antipode_cancellation_t4_swapped(const Coproduct& d, const Counit& eps,
                                             const Antipode& s, const CanonicalOperator& t4) {
  if (!t4.matrix) return CheckResult::skipped();
  const Index n = d.base_dim();
  for (Index c = 0; c < n; ++c) {
    for (Index a = 0; a < n; ++a) {
      Vec lhs(n);
      for (const auto& [pq, v] : t4.matrix->column(pair_index(c, a, n))) {
        const auto [p, q] = split_pair(pq, n);
        const Vec w = d.base()->multiply(s.inverse.column_dense(q), basis_vec(n, p));
        for (Index r = 0; r < n; ++r) lhs[r] += v * w[r];
      }
      Vec want = vec_scale(eps.functional.coords[a], basis_vec(n, c));
      if (lhs != want) {
        return CheckResult::fail(Witness{{c, a}, vec_sub(lhs, want)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult antipode_antihomomorphism(const Coproduct& d, const Antipode& s) {
  const Index n = d.base_dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vec lhs(n);
      for (const auto& [k, c] : d.base()->product_terms(i, j)) {
        const Vec sk = s.map.column_dense(k);
        for (Index r = 0; r < n; ++r) lhs[r] += c * sk[r];
      }
      Vec rhs = d.base()->multiply(s.map.column_dense(j), s.map.column_dense(i));
      if (lhs != rhs) {
        return CheckResult::fail(Witness{{i, j}, vec_sub(lhs, rhs)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult antipode_cross_inverse(const Coproduct& d, const Antipode& s) {
  const Index n = d.base_dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vec lhs = s.map.apply(d.base()->multiply(s.inverse.column_dense(i), basis_vec(n, j)));
      Vec rhs = d.base()->multiply(s.map.column_dense(j), basis_vec(n, i));
      if (lhs != rhs) {
        return CheckResult::fail(Witness{{i, j, 0}, vec_sub(lhs, rhs)});
      }
      lhs = s.inverse.apply(d.base()->multiply(s.map.column_dense(i), basis_vec(n, j)));
      rhs = d.base()->multiply(s.inverse.column_dense(j), basis_vec(n, i));
      if (lhs != rhs) {
        return CheckResult::fail(Witness{{i, j, 1}, vec_sub(lhs, rhs)});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult antipode_flips_coproduct(const Coproduct& d, const Counit& eps, const Antipode& s,
                                     const CanonicalOperator& t1) {
  if (!t1.matrix || !t1.inverse) return CheckResult::skipped();
  const Index n = d.base_dim();
  const Matrix eye = Matrix::identity(n);
  const Matrix t23 = eye.kron(*t1.matrix);
  const Matrix inv12 = t1.inverse->kron(eye);
  const Matrix f23 = eye.kron(d.square().flip());
  const Matrix composite = f23 * inv12 * f23 * inv12 * t23;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Vec sab = d.base()->multiply(s.map.column_dense(a), basis_vec(n, b));
      for (Index c = 0; c < n; ++c) {
        Vec lhs(n * n);
        for (Index r = 0; r < n; ++r) {
          if (sab[r].is_zero()) continue;
          for (const auto& [pq, v] : t1.matrix->column(pair_index(r, c, n))) {
            lhs[pq] += sab[r] * v;
          }
        }
        Vec rhs(n * n);
        for (const auto& [puv, v] : composite.column(triple_index(a, b, c, n))) {
          const Index p = puv / (n * n);
          const Index uv = puv % (n * n);
          rhs[uv] += eps.functional.coords[p] * v;
        }
        if (lhs != rhs) {
          return CheckResult::fail(Witness{{a, b, c}, vec_sub(lhs, rhs)});
        }
      }
    }
  }
  return CheckResult::pass();
}

RegularityCertificate complete_to_regular(const Coproduct& d, const Antipode& s,
                                          const CanonicalOperator& t1,
                                          const CanonicalOperator& t4,
                                          const CanonicalOperator& t2_direct,
                                          const CanonicalOperator& t3_direct) {
  const Index n = d.base_dim();
  const Matrix& inv1 = require_inverse(t1, "regularity completion");
  const Matrix& inv4 = require_inverse(t4, "regularity completion");
  if (!t2_direct.matrix || !t3_direct.matrix) {
    throw DerivationError("direct-mismatch", Witness{},
                          "regularity completion has no direct maps to compare against");
  }
  const Matrix eye = Matrix::identity(n);
  RegularityCertificate cert;
  cert.t3 = eye.kron(s.inverse) * inv1 * eye.kron(s.map);
  cert.t2 = s.map.kron(eye) * inv4 * s.inverse.kron(eye);
  cert.t2_match = cert.t2 == *t2_direct.matrix;
  cert.t3_match = cert.t3 == *t3_direct.matrix;
  return cert;
}

CheckResult coproduct_nondegeneracy(const Coproduct& d) {
  const Index n = d.base_dim();
  const Index dim = n * n;
  Matrix left_span(dim, n * dim);
  Matrix right_span(dim, n * dim);
  for (Index i = 0; i < n; ++i) {
    d.value(i).left_action().for_each_nonzero([&](Index r, Index c, const Rational& v) {
      left_span.add_to(r, i * dim + c, v);
    });
    d.value(i).right_action().for_each_nonzero([&](Index r, Index c, const Rational& v) {
      right_span.add_to(r, i * dim + c, v);
    });
  }
  if (rank(left_span) < dim) {
    auto functional = kernel_basis(left_span.transpose());
    return CheckResult::fail(
        Witness{{0}, functional.empty() ? Vec{} : functional.front()});
  }
  if (rank(right_span) < dim) {
    auto functional = kernel_basis(right_span.transpose());
    return CheckResult::fail(
        Witness{{1}, functional.empty() ? Vec{} : functional.front()});
  }
  return CheckResult::pass();
}

}  // namespace mhopf
