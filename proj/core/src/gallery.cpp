#include "mhopf/gallery.hpp"

#include <charconv>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

AlgebraRef cyclic_group_algebra(Index k, std::vector<std::string> labels = {},
                                std::string name = {}) {
  std::vector<StructureTriple> triples;
  triples.reserve(k * k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) triples.push_back({i, j, (i + j) % k, 1});
  }
  if (labels.empty()) {
    for (Index i = 0; i < k; ++i) labels.push_back("g" + std::to_string(i));
  }
  return FiniteAlgebra::create(k, triples, std::move(labels),
                               name.empty() ? "cyclic-" + std::to_string(k) : std::move(name));
}

AlgebraRef cyclic_function_algebra(Index k) {
  std::vector<StructureTriple> triples;
  std::vector<std::string> labels;
  for (Index i = 0; i < k; ++i) {
    triples.push_back({i, i, i, 1});
    labels.push_back("d" + std::to_string(i));
  }
  return FiniteAlgebra::create(k, triples, std::move(labels),
                               "functions-on-cyclic-" + std::to_string(k));
}

Instance diagonal_instance(std::string name, AlgebraRef alg) {
  TensorSquare sq = TensorSquare::build(alg, alg->dimension());
  const Index n = alg->dimension();
  std::vector<Vec> tensors;
  tensors.reserve(n);
  for (Index i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    tensors.push_back(sq.tensor(e, e));
  }
  return {std::move(name), alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

Instance convolution_instance(std::string name, AlgebraRef alg, Index k) {
  TensorSquare sq = TensorSquare::build(alg, alg->dimension());
  std::vector<Vec> tensors;
  tensors.reserve(k);
  for (Index m = 0; m < k; ++m) {
    Vec t(k * k);
    for (Index i = 0; i < k; ++i) t[pair_index(i, (m + k - i) % k, k)] = 1;
    tensors.push_back(std::move(t));
  }
  return {std::move(name), alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

Instance sweedler_instance() {
  // Basis 1, g, x, gx with g^2 = 1, x^2 = 0, x g = -g x.
  std::vector<StructureTriple> triples;
  for (Index j = 0; j < 4; ++j) triples.push_back({0, j, j, 1});
  for (Index i = 1; i < 4; ++i) triples.push_back({i, 0, i, 1});
  triples.push_back({1, 1, 0, 1});    // g g = 1
  triples.push_back({1, 2, 3, 1});    // g x = gx
  triples.push_back({1, 3, 2, 1});    // g gx = x
  triples.push_back({2, 1, 3, -1});   // x g = -gx
  triples.push_back({3, 1, 2, -1});   // gx g = -x
  AlgebraRef alg = FiniteAlgebra::create(4, triples, {"1", "g", "x", "gx"}, "sweedler-h4");
  TensorSquare sq = TensorSquare::build(alg, 4);
  auto tensor_of = [&](std::initializer_list<std::pair<std::pair<Index, Index>, Rational>> terms) {
    Vec t(16);
    for (const auto& [pq, c] : terms) t[pair_index(pq.first, pq.second, 4)] = c;
    return t;
  };
  std::vector<Vec> tensors;
  tensors.push_back(tensor_of({{{0, 0}, 1}}));               // D(1) = 1 (x) 1
  tensors.push_back(tensor_of({{{1, 1}, 1}}));               // D(g) = g (x) g
  tensors.push_back(tensor_of({{{2, 0}, 1}, {{1, 2}, 1}}));  // D(x) = x (x) 1 + g (x) x
  tensors.push_back(tensor_of({{{3, 1}, 1}, {{0, 3}, 1}}));  // D(gx) = gx (x) g + 1 (x) gx
  return {"sweedler-h4", alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

Instance broken_coassoc_instance() {
  // Functions on the quasigroup (Z3, x o y = x - y): multiplicative and
  // bijective on both canonical sides, yet not coassociative.
  AlgebraRef alg = cyclic_function_algebra(3);
  TensorSquare sq = TensorSquare::build(alg, 3);
  std::vector<Vec> tensors;
  for (Index m = 0; m < 3; ++m) {
    Vec t(9);
    for (Index y = 0; y < 3; ++y) t[pair_index((m + y) % 3, y, 3)] = 1;
    tensors.push_back(std::move(t));
  }
  return {"broken-coassoc", alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

Instance broken_homomorphism_instance() {
  // Q[t]/(t^2) with the primitive coproduct on t.
  std::vector<StructureTriple> triples = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}};
  AlgebraRef alg = FiniteAlgebra::create(2, triples, {"1", "t"}, "dual-numbers");
  TensorSquare sq = TensorSquare::build(alg, 2);
  std::vector<Vec> tensors(2, Vec(4));
  tensors[0][pair_index(0, 0, 2)] = 1;
  tensors[1][pair_index(1, 0, 2)] = 1;
  tensors[1][pair_index(0, 1, 2)] = 1;
  return {"broken-homomorphism", alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

Instance degenerate_product_instance() {
  std::vector<StructureTriple> triples;  // u u = 0
  AlgebraRef alg = FiniteAlgebra::create(1, triples, {"u"}, "zero-product");
  TensorSquare sq = TensorSquare::build(alg, 1);
  std::vector<Vec> tensors = {Vec(1)};
  return {"degenerate-product", alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

Instance zero_coproduct_instance() {
  AlgebraRef alg = cyclic_group_algebra(2, {"e", "g"}, "qc2");
  TensorSquare sq = TensorSquare::build(alg, 2);
  std::vector<Vec> tensors(2, Vec(4));
  return {"zero-coproduct", alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

Instance broken_t4_instance() {
  // D(e) = e (x) e, D(g) = g (x) e: multiplicative, first map is the
  // identity, but the fourth map collapses the second leg.
  AlgebraRef alg = cyclic_group_algebra(2, {"e", "g"}, "qc2");
  TensorSquare sq = TensorSquare::build(alg, 2);
  std::vector<Vec> tensors(2, Vec(4));
  tensors[0][pair_index(0, 0, 2)] = 1;
  tensors[1][pair_index(1, 0, 2)] = 1;
  return {"broken-t4", alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

std::optional<Index> cyclic_order(const std::string& name) {
  if (name.rfind("cyclic-", 0) != 0) return std::nullopt;
  const std::string tail = name.substr(7);
  if (tail.empty()) return std::nullopt;
  Index k = 0;
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || k == 0) return std::nullopt;
  return k;
}

}  // namespace

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries = {
      {"qc2-group-algebra", "two element group algebra with the diagonal coproduct",
       "all checks pass"},
      {"fc2-function-algebra", "functions on the two element group with the convolution coproduct",
       "all checks pass"},
      {"cyclic-n", "cyclic group algebra family; instantiate as cyclic-<k>", "all checks pass"},
      {"sweedler-h4", "four dimensional unital Hopf algebra whose antipode has order four",
       "all checks pass"},
      {"broken-coassoc",
       "functions on a quasigroup: multiplicative and bijective, not coassociative",
       "coassoc_left and coassoc_right fail"},
      {"broken-homomorphism", "dual numbers with the primitive coproduct",
       "homomorphism fails"},
      {"degenerate-product", "one dimensional algebra with the zero product",
       "nondegenerate and idempotent fail, the rest is skipped"},
      {"zero-coproduct", "two element group algebra with the zero coproduct",
       "bijectivity, fullness and coproduct nondegeneracy fail"},
      {"broken-t4", "coproduct collapsing the second leg over the two element group algebra",
       "t2/t4 bijectivity and fullness fail"},
  };
  return entries;
}

bool gallery_has(const std::string& name) {
  if (cyclic_order(name)) return true;
  for (const GalleryEntry& e : gallery_entries()) {
    if (e.name == name && e.name != "cyclic-n") return true;
  }
  return false;
}

Instance gallery_instance(const std::string& name) {
  if (auto k = cyclic_order(name)) {
    return diagonal_instance(name, cyclic_group_algebra(*k));
  }
  if (name == "qc2-group-algebra") {
    return diagonal_instance(name, cyclic_group_algebra(2, {"e", "g"}, "qc2"));
  }
  if (name == "fc2-function-algebra") {
    return convolution_instance(name, cyclic_function_algebra(2), 2);
  }
  if (name == "sweedler-h4") return sweedler_instance();
  if (name == "broken-coassoc") return broken_coassoc_instance();
  if (name == "broken-homomorphism") return broken_homomorphism_instance();
  if (name == "degenerate-product") return degenerate_product_instance();
  if (name == "zero-coproduct") return zero_coproduct_instance();
  if (name == "broken-t4") return broken_t4_instance();
  throw InputError("unknown gallery instance: " + name);
}

}  // namespace mhopf
