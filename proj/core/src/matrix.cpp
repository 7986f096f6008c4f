#include "mhopf/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <utility>

#include "mhopf/error.hpp"

namespace mhopf {

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LogicBug("vector size mismatch in add");
  Vec out(a.size());
  for (Index i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LogicBug("vector size mismatch in sub");
  Vec out(a.size());
  for (Index i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rational vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LogicBug("vector size mismatch in dot");
  Rational acc;
  for (Index i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

Matrix::Matrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

Matrix Matrix::identity(Index n) {
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::permutation(const std::vector<Index>& image) {
  const Index n = image.size();
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) m.set(image[i], i, 1);
  return m;
}

Matrix Matrix::from_columns(Index rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (Index c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw LogicBug("column height mismatch");
    for (Index r = 0; r < rows; ++r) {
      if (!cols[c][r].is_zero()) m.set(r, c, cols[c][r]);
    }
  }
  return m;
}

Index Matrix::nonzero_count() const {
  if (!dense_) return sparse_.size();
  Index n = 0;
  for (const auto& v : dense_store_) {
    if (!v.is_zero()) ++n;
  }
  return n;
}

Rational Matrix::at(Index r, Index c) const {
  if (r >= rows_ || c >= cols_) throw LogicBug("matrix index out of range");
  if (dense_) return dense_store_[r * cols_ + c];
  auto it = sparse_.find({r, c});
  return it == sparse_.end() ? Rational() : it->second;
}

void Matrix::set(Index r, Index c, Rational v) {
  if (r >= rows_ || c >= cols_) throw LogicBug("matrix index out of range");
  if (dense_) {
    dense_store_[r * cols_ + c] = std::move(v);
    return;
  }
  if (v.is_zero()) {
    sparse_.erase({r, c});
    return;
  }
  sparse_[{r, c}] = std::move(v);
  if (sparse_.size() * 2 > rows_ * cols_) densify();
}

void Matrix::add_to(Index r, Index c, const Rational& v) {
  if (v.is_zero()) return;
  set(r, c, at(r, c) + v);
}

void Matrix::densify() {
  dense_store_.assign(rows_ * cols_, Rational());
  for (auto& [rc, v] : sparse_) dense_store_[rc.first * cols_ + rc.second] = std::move(v);
  sparse_.clear();
  dense_ = true;
}

void Matrix::for_each_nonzero(
    const std::function<void(Index, Index, const Rational&)>& fn) const {
  if (dense_) {
    for (Index r = 0; r < rows_; ++r) {
      for (Index c = 0; c < cols_; ++c) {
        const Rational& v = dense_store_[r * cols_ + c];
        if (!v.is_zero()) fn(r, c, v);
      }
    }
    return;
  }
  for (const auto& [rc, v] : sparse_) fn(rc.first, rc.second, v);
}

SparseVec Matrix::column(Index c) const {
  SparseVec out;
  if (dense_) {
    for (Index r = 0; r < rows_; ++r) {
      const Rational& v = dense_store_[r * cols_ + c];
      if (!v.is_zero()) out.emplace_back(r, v);
    }
    return out;
  }
  for (const auto& [rc, v] : sparse_) {
    if (rc.second == c) out.emplace_back(rc.first, v);
  }
  return out;
}

std::vector<SparseVec> Matrix::columns() const {
  std::vector<SparseVec> out(cols_);
  for_each_nonzero([&](Index r, Index c, const Rational& v) { out[c].emplace_back(r, v); });
  return out;
}

Vec Matrix::column_dense(Index c) const {
  Vec out(rows_);
  for (const auto& [r, v] : column(c)) out[r] = v;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for_each_nonzero([&](Index r, Index c, const Rational& v) { m.set(c, r, v); });
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw LogicBug("matrix product shape mismatch");
  std::vector<SparseVec> rows_of_o(o.rows_);
  o.for_each_nonzero(
      [&](Index r, Index c, const Rational& v) { rows_of_o[r].emplace_back(c, v); });
  std::map<std::pair<Index, Index>, Rational> acc;
  for_each_nonzero([&](Index r, Index k, const Rational& v) {
    for (const auto& [c, w] : rows_of_o[k]) acc[{r, c}] += v * w;
  });
  Matrix m(rows_, o.cols_);
  for (auto& [rc, v] : acc) {
    if (!v.is_zero()) m.set(rc.first, rc.second, std::move(v));
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LogicBug("matrix sum shape mismatch");
  Matrix m = *this;
  o.for_each_nonzero([&](Index r, Index c, const Rational& v) { m.add_to(r, c, v); });
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LogicBug("matrix diff shape mismatch");
  Matrix m = *this;
  o.for_each_nonzero([&](Index r, Index c, const Rational& v) { m.add_to(r, c, -v); });
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw LogicBug("matrix apply shape mismatch");
  Vec out(rows_);
  for_each_nonzero([&](Index r, Index c, const Rational& val) {
    if (!v[c].is_zero()) out[r] += val * v[c];
  });
  return out;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix m(rows_ * o.rows_, cols_ * o.cols_);
  for_each_nonzero([&](Index r1, Index c1, const Rational& v1) {
    o.for_each_nonzero([&](Index r2, Index c2, const Rational& v2) {
      m.set(r1 * o.rows_ + r2, c1 * o.cols_ + c2, v1 * v2);
    });
  });
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  bool equal = true;
  for_each_nonzero([&](Index r, Index c, const Rational& v) {
    if (equal && o.at(r, c) != v) equal = false;
  });
  if (!equal) return false;
  o.for_each_nonzero([&](Index r, Index c, const Rational& v) {
    if (equal && at(r, c) != v) equal = false;
  });
  return equal;
}

bool Matrix::is_zero() const { return nonzero_count() == 0; }

namespace {

// Fraction-free elimination working on an integer copy: each row of the
// rational system is scaled by the lcm of its denominators, then reduced by
// one-step Bareiss with the first-nonzero pivot rule.
struct Echelon {
  Index m = 0, n_a = 0, n_total = 0;
  std::vector<std::vector<mpz_class>> w;
  std::vector<std::pair<Index, Index>> pivots;  // (row position, column)

  Echelon(const Matrix& a, const std::vector<Vec>& aug) {
    m = a.rows();
    n_a = a.cols();
    n_total = n_a + aug.size();
    for (const Vec& col : aug) {
      if (col.size() != m) throw LogicBug("augmented column height mismatch");
    }
    std::vector<std::vector<mpq_class>> rows(m, std::vector<mpq_class>(n_total, mpq_class(0)));
    a.for_each_nonzero(
        [&](Index r, Index c, const Rational& v) { rows[r][c] = v.raw(); });
    for (Index k = 0; k < aug.size(); ++k) {
      for (Index r = 0; r < m; ++r) {
        if (!aug[k][r].is_zero()) rows[r][n_a + k] = aug[k][r].raw();
      }
    }
    w.assign(m, std::vector<mpz_class>(n_total, mpz_class(0)));
    for (Index r = 0; r < m; ++r) {
      mpz_class scale(1);
      for (const mpq_class& q : rows[r]) {
        if (sgn(q) != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
      }
      for (Index c = 0; c < n_total; ++c) {
        if (sgn(rows[r][c]) != 0) {
          mpq_class scaled = rows[r][c] * scale;
          if (scaled.get_den() != 1) throw LogicBug("row scaling failed");
          w[r][c] = scaled.get_num();
        }
      }
    }
    run();
  }

  void run() {
    Index pivot_row = 0;
    mpz_class prev(1);
    mpz_class t, q, rem;
    for (Index col = 0; col < n_a && pivot_row < m; ++col) {
      Index found = m;
      for (Index r = pivot_row; r < m; ++r) {
        if (sgn(w[r][col]) != 0) {
          found = r;
          break;
        }
      }
      if (found == m) continue;
      if (found != pivot_row) std::swap(w[found], w[pivot_row]);
      for (Index i = pivot_row + 1; i < m; ++i) {
        if (sgn(w[i][col]) == 0) {
          // Still rescale by the pivot so the Bareiss invariant holds.
          for (Index j = col; j < n_total; ++j) {
            if (sgn(w[i][j]) == 0) continue;
            t = w[pivot_row][col] * w[i][j];
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            if (sgn(rem) != 0) throw LogicBug("fraction-free step not exact");
            w[i][j] = q;
          }
          continue;
        }
        for (Index j = n_total; j-- > col;) {
          t = w[pivot_row][col] * w[i][j] - w[i][col] * w[pivot_row][j];
          if (sgn(t) == 0) {
            w[i][j] = 0;
            continue;
          }
          mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          if (sgn(rem) != 0) throw LogicBug("fraction-free step not exact");
          w[i][j] = q;
        }
      }
      pivots.emplace_back(pivot_row, col);
      prev = w[pivot_row][col];
      ++pivot_row;
    }
  }

  Index rank() const { return pivots.size(); }

  // Back-substitution for one augmented column; free variables pinned to 0.
  std::optional<Vec> solve_column(Index aug_index) const {
    const Index b = n_a + aug_index;
    for (Index r = rank(); r < m; ++r) {
      if (sgn(w[r][b]) != 0) return std::nullopt;
    }
    std::vector<mpq_class> x(n_a, mpq_class(0));
    for (Index p = pivots.size(); p-- > 0;) {
      const auto [r, c] = pivots[p];
      mpq_class acc(w[r][b]);
      for (Index j = c + 1; j < n_a; ++j) {
        if (sgn(w[r][j]) != 0 && sgn(x[j]) != 0) acc -= mpq_class(w[r][j]) * x[j];
      }
      acc /= mpq_class(w[r][c]);
      x[c] = acc;
    }
    Vec out(n_a);
    for (Index i = 0; i < n_a; ++i) {
      if (sgn(x[i]) != 0) out[i] = Rational(x[i]);
    }
    return out;
  }

  std::vector<Vec> kernel() const {
    std::vector<bool> is_pivot(n_a, false);
    for (const auto& [r, c] : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (Index f = 0; f < n_a; ++f) {
      if (is_pivot[f]) continue;
      std::vector<mpq_class> x(n_a, mpq_class(0));
      x[f] = 1;
      for (Index p = pivots.size(); p-- > 0;) {
        const auto [r, c] = pivots[p];
        mpq_class acc(0);
        for (Index j = c + 1; j < n_a; ++j) {
          if (sgn(w[r][j]) != 0 && sgn(x[j]) != 0) acc -= mpq_class(w[r][j]) * x[j];
        }
        acc /= mpq_class(w[r][c]);
        x[c] = acc;
      }
      Vec out(n_a);
      for (Index i = 0; i < n_a; ++i) {
        if (sgn(x[i]) != 0) out[i] = Rational(x[i]);
      }
      basis.push_back(std::move(out));
    }
    return basis;
  }
};

}  // namespace

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw LogicBug("solve shape mismatch");
  Echelon e(m, {rhs});
  return e.solve_column(0);
}

Index rank(const Matrix& m) {
  Echelon e(m, {});
  return e.rank();
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw LogicBug("invert wants a square matrix");
  const Index n = m.rows();
  std::vector<Vec> aug(n, Vec(n));
  for (Index i = 0; i < n; ++i) aug[i][i] = 1;
  Echelon e(m, aug);
  if (e.rank() != n) return std::nullopt;
  std::vector<Vec> cols;
  cols.reserve(n);
  for (Index i = 0; i < n; ++i) {
    auto col = e.solve_column(i);
    if (!col) throw LogicBug("inconsistent inverse columns at full rank");
    cols.push_back(std::move(*col));
  }
  return Matrix::from_columns(n, cols);
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e(m, {});
  return e.kernel();
}

std::optional<Vec> membership_in_span(const Vec& v, const std::vector<Vec>& generators) {
  const Index n = v.size();
  Matrix m(n, generators.size());
  for (Index c = 0; c < generators.size(); ++c) {
    if (generators[c].size() != n) throw LogicBug("generator size mismatch");
    for (Index r = 0; r < n; ++r) {
      if (!generators[c][r].is_zero()) m.set(r, c, generators[c][r]);
    }
  }
  return solve(m, v);
}

}  // namespace mhopf
