#include "mhopf/groupmodel.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

std::optional<long long> parse_integer(const std::string& text) {
  if (text.empty()) return std::nullopt;
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  if (std::to_string(v) != text) return std::nullopt;  // canonical form only
  return v;
}

class IntegerGroup final : public GroupOracle {
 public:
  std::string name() const override { return "z"; }
  bool is_finite() const override { return false; }
  Token identity() const override { return "0"; }
  Token multiply(const Token& a, const Token& b) const override {
    return std::to_string(*parse_integer(a) + *parse_integer(b));
  }
  Token invert(const Token& a) const override { return std::to_string(-*parse_integer(a)); }
  bool valid_token(const Token& a) const override { return parse_integer(a).has_value(); }
  std::vector<Token> window(Index radius) const override {
    std::vector<Token> w;
    const long long r = static_cast<long long>(radius);
    for (long long v = -r; v <= r; ++v) w.push_back(std::to_string(v));
    return w;
  }
  bool on_boundary(const Token& a, Index radius) const override {
    const auto v = parse_integer(a);
    return v && static_cast<Index>(std::abs(*v)) == radius;
  }
};

std::optional<std::vector<long long>> parse_tuple(const std::string& text, Index arity) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string part =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    const auto v = parse_integer(part);
    if (!v) return std::nullopt;
    out.push_back(*v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != arity) return std::nullopt;
  return out;
}

std::string join_tuple(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

class IntegerPowerGroup final : public GroupOracle {
 public:
  explicit IntegerPowerGroup(Index arity) : arity_(arity) {}

  std::string name() const override { return "z^" + std::to_string(arity_); }
  bool is_finite() const override { return false; }
  Token identity() const override { return join_tuple(std::vector<long long>(arity_, 0)); }
  Token multiply(const Token& a, const Token& b) const override {
    auto x = parse_tuple(a, arity_);
    auto y = parse_tuple(b, arity_);
    std::vector<long long> out(arity_);
    for (Index i = 0; i < arity_; ++i) out[i] = (*x)[i] + (*y)[i];
    return join_tuple(out);
  }
  Token invert(const Token& a) const override {
    auto x = parse_tuple(a, arity_);
    std::vector<long long> out(arity_);
    for (Index i = 0; i < arity_; ++i) out[i] = -(*x)[i];
    return join_tuple(out);
  }
  bool valid_token(const Token& a) const override { return parse_tuple(a, arity_).has_value(); }
  std::vector<Token> window(Index radius) const override {
    std::vector<Token> w;
    std::vector<long long> cur(arity_, -static_cast<long long>(radius));
    const long long r = static_cast<long long>(radius);
    while (true) {
      w.push_back(join_tuple(cur));
      Index i = arity_;
      while (i > 0) {
        --i;
        if (cur[i] < r) {
          ++cur[i];
          for (Index j = i + 1; j < arity_; ++j) cur[j] = -r;
          break;
        }
        if (i == 0) return w;
      }
    }
  }
  bool on_boundary(const Token& a, Index radius) const override {
    const auto x = parse_tuple(a, arity_);
    if (!x) return false;
    for (const long long v : *x) {
      if (static_cast<Index>(std::abs(v)) == radius) return true;
    }
    return false;
  }

 private:
  Index arity_;
};

class TableGroup final : public GroupOracle {
 public:
  TableGroup(std::string name, std::vector<std::vector<Index>> table)
      : name_(std::move(name)), table_(std::move(table)) {}

  std::string name() const override { return name_; }
  bool is_finite() const override { return true; }
  Token identity() const override { return "0"; }
  Token multiply(const Token& a, const Token& b) const override {
    return std::to_string(table_[index_of(a)][index_of(b)]);
  }
  Token invert(const Token& a) const override {
    const Index i = index_of(a);
    for (Index j = 0; j < table_.size(); ++j) {
      if (table_[i][j] == 0) return std::to_string(j);
    }
    throw LogicBug("validated group table has no inverse for " + a);
  }
  bool valid_token(const Token& a) const override {
    const auto v = parse_integer(a);
    return v && *v >= 0 && static_cast<Index>(*v) < table_.size();
  }
  std::vector<Token> window(Index) const override {
    std::vector<Token> w;
    for (Index i = 0; i < table_.size(); ++i) w.push_back(std::to_string(i));
    return w;
  }
  bool on_boundary(const Token&, Index) const override { return false; }

 private:
  Index index_of(const Token& a) const {
    const auto v = parse_integer(a);
    if (!v || *v < 0 || static_cast<Index>(*v) >= table_.size()) {
      throw InputError("invalid group token: " + a);
    }
    return static_cast<Index>(*v);
  }

  std::string name_;
  std::vector<std::vector<Index>> table_;
};

class ProductGroup final : public GroupOracle {
 public:
  ProductGroup(OracleRef left, OracleRef right)
      : left_(std::move(left)), right_(std::move(right)) {}

  std::string name() const override { return left_->name() + "x" + right_->name(); }
  bool is_finite() const override { return left_->is_finite() && right_->is_finite(); }
  Token identity() const override { return left_->identity() + "|" + right_->identity(); }
  Token multiply(const Token& a, const Token& b) const override {
    const auto [al, ar] = split(a);
    const auto [bl, br] = split(b);
    return left_->multiply(al, bl) + "|" + right_->multiply(ar, br);
  }
  Token invert(const Token& a) const override {
    const auto [al, ar] = split(a);
    return left_->invert(al) + "|" + right_->invert(ar);
  }
  bool valid_token(const Token& a) const override { return try_split(a).has_value(); }
  std::vector<Token> window(Index radius) const override {
    std::vector<Token> w;
    for (const Token& l : left_->window(radius)) {
      for (const Token& r : right_->window(radius)) w.push_back(l + "|" + r);
    }
    return w;
  }
  bool on_boundary(const Token& a, Index radius) const override {
    const auto [al, ar] = split(a);
    return left_->on_boundary(al, radius) || right_->on_boundary(ar, radius);
  }

 private:
  std::optional<std::pair<Token, Token>> try_split(const Token& a) const {
    for (std::size_t pos = a.find('|'); pos != std::string::npos; pos = a.find('|', pos + 1)) {
      const Token l = a.substr(0, pos);
      const Token r = a.substr(pos + 1);
      if (left_->valid_token(l) && right_->valid_token(r)) return std::make_pair(l, r);
    }
    return std::nullopt;
  }
  std::pair<Token, Token> split(const Token& a) const {
    auto parts = try_split(a);
    if (!parts) throw InputError("invalid product group token: " + a);
    return *parts;
  }

  OracleRef left_, right_;
};

std::vector<std::vector<Index>> cyclic_table(Index n) {
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return table;
}

void validate_group_table(const std::vector<std::vector<Index>>& table) {
  const Index n = table.size();
  if (n == 0) throw InputError("group table must not be empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table must be square");
    for (const Index v : row) {
      if (v >= n) throw InputError("group table entry out of range");
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i) {
      throw InputError("group table element 0 must be the identity");
    }
  }
  for (Index i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (Index j = 0; j < n; ++j) {
      if (seen_row[table[i][j]] || seen_col[table[j][i]]) {
        throw InputError("group table rows and columns must be permutations");
      }
      seen_row[table[i][j]] = true;
      seen_col[table[j][i]] = true;
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw InputError("group table is not associative at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ", " + std::to_string(k) + ")");
        }
      }
    }
  }
}

FinSuppTensor map_tensor(const FinSuppTensor& t,
                         const std::function<std::pair<Token, Token>(const Token&, const Token&)>&
                             point_map) {
  FinSuppTensor out;
  for (const auto& [key, v] : t) {
    if (v.is_zero()) continue;
    auto target = point_map(key.first, key.second);
    auto& slot = out[std::move(target)];
    slot += v;
    if (slot.is_zero()) out.erase(target);
  }
  return out;
}

}  // namespace

std::vector<Token> GroupOracle::elements() const {
  if (!is_finite()) {
    throw InfiniteGroupVerdictRefused(
        "a global element listing of an infinite group was requested; only window-scoped "
        "statements are available");
  }
  return window(0);
}

OracleRef parse_group_spec(const std::string& spec) {
  if (spec == "z") return std::make_shared<IntegerGroup>();
  if (spec.rfind("z^", 0) == 0) {
    const auto d = parse_integer(spec.substr(2));
    if (!d || *d < 1 || *d > 4) {
      throw InputError("integer power groups support arity 1..4, got: " + spec);
    }
    if (*d == 1) return std::make_shared<IntegerGroup>();
    return std::make_shared<IntegerPowerGroup>(static_cast<Index>(*d));
  }
  if (spec.rfind("cyclic:", 0) == 0) {
    const auto n = parse_integer(spec.substr(7));
    if (!n || *n < 1 || *n > 256) {
      throw InputError("cyclic group order must lie in 1..256, got: " + spec);
    }
    return std::make_shared<TableGroup>("cyclic:" + std::to_string(*n),
                                        cyclic_table(static_cast<Index>(*n)));
  }
  if (spec.rfind("cayley:", 0) == 0) {
    const std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) throw InputError("cannot read group table file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return make_cayley_group(buffer.str(), path);
  }
  throw InputError("unknown group spec (expected z, z^d, cyclic:n or cayley:<path>): " + spec);
}

OracleRef make_cayley_group(const std::string& json_text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid group table JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
    throw InputError("group table JSON needs 'order' and 'table'");
  }
  if (!j["order"].is_number_unsigned()) throw InputError("group order must be unsigned");
  const Index n = j["order"].get<Index>();
  if (n == 0 || n > 256) throw InputError("group order must lie in 1..256");
  if (!j["table"].is_array() || j["table"].size() != n) {
    throw InputError("group table must be an array of 'order' rows");
  }
  std::vector<std::vector<Index>> table;
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != n) throw InputError("group table rows must have 'order' entries");
    std::vector<Index> r;
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) throw InputError("group table entries must be unsigned");
      r.push_back(v.get<Index>());
    }
    table.push_back(std::move(r));
  }
  validate_group_table(table);
  return std::make_shared<TableGroup>(name, std::move(table));
}

OracleRef make_product_group(OracleRef left, OracleRef right) {
  return std::make_shared<ProductGroup>(std::move(left), std::move(right));
}

FinSuppTensor kg_t1(const GroupOracle& g, const FinSuppTensor& t) {
  return map_tensor(t, [&](const Token& m, const Token& n) {
    return std::make_pair(g.multiply(m, g.invert(n)), n);
  });
}

FinSuppTensor kg_t1_inverse(const GroupOracle& g, const FinSuppTensor& t) {
  return map_tensor(t, [&](const Token& a, const Token& b) {
    return std::make_pair(g.multiply(a, b), b);
  });
}

FinSuppTensor kg_t2(const GroupOracle& g, const FinSuppTensor& t) {
  return map_tensor(t, [&](const Token& c, const Token& a) {
    return std::make_pair(c, g.multiply(g.invert(c), a));
  });
}

FinSuppTensor kg_t2_inverse(const GroupOracle& g, const FinSuppTensor& t) {
  return map_tensor(t, [&](const Token& c, const Token& x) {
    return std::make_pair(c, g.multiply(c, x));
  });
}

FinSuppTensor kg_t3(const GroupOracle& g, const FinSuppTensor& t) {
  // The function algebra is commutative, so the third map coincides with the
  // first; kept separate so both routes stay callable.
  return map_tensor(t, [&](const Token& m, const Token& n) {
    return std::make_pair(g.multiply(m, g.invert(n)), n);
  });
}

FinSuppTensor kg_t3_inverse(const GroupOracle& g, const FinSuppTensor& t) {
  return map_tensor(t, [&](const Token& a, const Token& b) {
    return std::make_pair(g.multiply(a, b), b);
  });
}

FinSuppTensor kg_t4(const GroupOracle& g, const FinSuppTensor& t) {
  return map_tensor(t, [&](const Token& c, const Token& a) {
    return std::make_pair(c, g.multiply(g.invert(c), a));
  });
}

FinSuppTensor kg_t4_inverse(const GroupOracle& g, const FinSuppTensor& t) {
  return map_tensor(t, [&](const Token& c, const Token& x) {
    return std::make_pair(c, g.multiply(c, x));
  });
}

KgDerivation kg_derive(const GroupOracle& g, Index radius) {
  const std::vector<Token> window = g.window(radius);
  const Token e = g.identity();
  KgDerivation out;
  for (const Token& n : window) {
    // Scalar extraction: collapse T1^{-1}(d_n (x) d_b) with the pointwise
    // product; the result must be the same multiple of d_b for every probe b.
    std::optional<Rational> lambda;
    for (const Token& b : window) {
      FinSuppTensor probe;
      probe[{n, b}] = 1;
      const FinSuppTensor pre = kg_t1_inverse(g, probe);
      FinSuppFunction collapsed;
      for (const auto& [key, v] : pre) {
        if (key.first == key.second) collapsed[key.first] += v;
      }
      Rational coefficient;
      for (const auto& [tok, v] : collapsed) {
        if (v.is_zero()) continue;
        if (tok != b) {
          throw DerivationError("not-scalar", Witness{},
                                "counit extraction at " + n + " produced support at " + tok +
                                    " for the probe " + b);
        }
        coefficient = v;
      }
      if (!lambda) {
        lambda = coefficient;
      } else if (*lambda != coefficient) {
        throw DerivationError("not-scalar", Witness{},
                              "counit extraction at " + n + " depends on the probe " + b);
      }
    }
    out.epsilon[n] = *lambda;
    const Rational closed = n == e ? Rational(1) : Rational(0);
    if (*lambda != closed) {
      throw DerivationError("counit-mismatch", Witness{},
                            "counit at " + n + " is " + lambda->str() +
                                ", the closed form gives " + closed.str());
    }
  }
  for (const Token& n : window) {
    // Antipode values: b |-> (eps (x) i) T1^{-1}(d_n (x) d_b) is left
    // multiplication by S(d_n).  The support certificate runs against the
    // enlarged window so inverses of boundary points stay interior.
    OracleMultiplier action;
    action.label = "S(d_" + n + ")";
    action.value = [&g, &out, n](const Token& b) {
      FinSuppTensor probe;
      probe[{n, b}] = 1;
      const FinSuppTensor pre = kg_t1_inverse(g, probe);
      Rational v;
      for (const auto& [key, c] : pre) {
        if (key.second != b) continue;
        auto it = out.epsilon.find(key.first);
        const Rational eps_value =
            it != out.epsilon.end() ? it->second
                                    : (key.first == g.identity() ? Rational(1) : Rational(0));
        v += eps_value * c;
      }
      return v;
    };
    const WindowMembership membership = kg_membership(g, action, radius + 1);
    if (!membership.member_within_window) {
      throw DerivationError("membership-failure", Witness{},
                            "antipode value at " + n + " has boundary support");
    }
    const Token inverse = g.invert(n);
    FinSuppFunction expected;
    expected[inverse] = 1;
    if (membership.window_restriction != expected) {
      throw DerivationError("direct-mismatch", Witness{},
                            "antipode at " + n + " does not match d_" + inverse);
    }
    out.antipode[n] = inverse;
  }
  return out;
}

WindowMembership kg_membership(const GroupOracle& g, const OracleMultiplier& m, Index radius) {
  WindowMembership out;
  for (const Token& t : g.window(radius)) {
    const Rational v = m.value(t);
    if (v.is_zero()) continue;
    out.window_restriction[t] = v;
    if (g.on_boundary(t, radius)) out.boundary_support.push_back(t);
  }
  out.member_within_window = out.boundary_support.empty();
  return out;
}

Instance group_algebra_instance(const OracleRef& g, Index max_dim) {
  const std::vector<Token> elems = g->elements();
  if (elems.size() > max_dim) {
    throw InputError("group order " + std::to_string(elems.size()) + " exceeds the limit " +
                     std::to_string(max_dim));
  }
  const Index n = elems.size();
  std::map<Token, Index> index;
  for (Index i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<StructureTriple> triples;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      triples.push_back({i, j, index.at(g->multiply(elems[i], elems[j])), 1});
    }
  }
  std::vector<std::string> labels;
  for (const Token& t : elems) labels.push_back("u_" + t);
  AlgebraRef alg = FiniteAlgebra::create(n, triples, labels, "qg:" + g->name());
  TensorSquare sq = TensorSquare::build(alg, max_dim);
  std::vector<Vec> tensors;
  for (Index i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    tensors.push_back(sq.tensor(e, e));
  }
  return {"qg:" + g->name(), alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

Instance function_algebra_instance(const OracleRef& g, Index max_dim) {
  const std::vector<Token> elems = g->elements();
  if (elems.size() > max_dim) {
    throw InputError("group order " + std::to_string(elems.size()) + " exceeds the limit " +
                     std::to_string(max_dim));
  }
  const Index n = elems.size();
  std::map<Token, Index> index;
  for (Index i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<StructureTriple> triples;
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) {
    triples.push_back({i, i, i, 1});
    labels.push_back("d_" + elems[i]);
  }
  AlgebraRef alg = FiniteAlgebra::create(n, triples, labels, "kg:" + g->name());
  TensorSquare sq = TensorSquare::build(alg, max_dim);
  std::vector<Vec> tensors(n, Vec(n * n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      tensors[index.at(g->multiply(elems[i], elems[j]))][pair_index(i, j, n)] = 1;
    }
  }
  return {"kg:" + g->name(), alg, Coproduct::element_valued(std::move(sq), std::move(tensors))};
}

CheckReport run_kg_window_suite(const OracleRef& g, Index radius, std::uint64_t seed,
                                Index roundtrip_samples) {
  CheckReport report;
  const std::vector<Token> window = g->window(radius);
  report.instance = "kg:" + g->name() + " (window radius " + std::to_string(radius) + ")";
  report.dimension = window.size();

  auto add = [&](const std::string& name, CheckResult result,
                 std::optional<std::string> detail = std::nullopt) {
    report.entries.push_back({name, result.status, std::move(result.witness), 0,
                              std::move(detail)});
  };

  {
    CheckResult closure = CheckResult::pass();
    bool has_identity = false;
    for (const Token& t : window) {
      if (t == g->identity()) has_identity = true;
      if (!g->valid_token(t) ||
          std::find(window.begin(), window.end(), g->invert(t)) == window.end() ||
          g->multiply(t, g->identity()) != t) {
        closure = CheckResult::fail(Witness{});
        break;
      }
    }
    if (!has_identity) closure = CheckResult::fail(Witness{});
    add("window_closure", closure);
  }

  std::mt19937_64 rng(seed);
  auto random_tensor = [&]() {
    FinSuppTensor t;
    const Index terms = 1 + static_cast<Index>(rng() % 4);
    for (Index k = 0; k < terms; ++k) {
      const Token& s = window[rng() % window.size()];
      const Token& u = window[rng() % window.size()];
      long num = static_cast<long>(rng() % 19) - 9;
      if (num == 0) num = 1;
      const long den = 1 + static_cast<long>(rng() % 4);
      auto& slot = t[{s, u}];
      slot += Rational(num, den);
      if (slot.is_zero()) t.erase({s, u});
    }
    return t;
  };

  using MapFn = FinSuppTensor (*)(const GroupOracle&, const FinSuppTensor&);
  const std::pair<MapFn, MapFn> maps[4] = {{kg_t1, kg_t1_inverse},
                                           {kg_t2, kg_t2_inverse},
                                           {kg_t3, kg_t3_inverse},
                                           {kg_t4, kg_t4_inverse}};
  for (Index m = 0; m < 4; ++m) {
    CheckResult result = CheckResult::pass();
    std::optional<std::string> detail;
    for (Index sample = 0; sample < roundtrip_samples; ++sample) {
      const FinSuppTensor t = random_tensor();
      if (maps[m].second(*g, maps[m].first(*g, t)) != t ||
          maps[m].first(*g, maps[m].second(*g, t)) != t) {
        result = CheckResult::fail(Witness{{sample}, {}});
        detail = "round trip broke on sample " + std::to_string(sample);
        break;
      }
    }
    add("roundtrip_t" + std::to_string(m + 1), result, detail);
  }

  try {
    kg_derive(*g, radius);
    add("generic_derivation_matches_closed_forms", CheckResult::pass());
  } catch (const DerivationError& e) {
    add("generic_derivation_matches_closed_forms", CheckResult::fail(e.witness()),
        std::string(e.what()));
  }

  if (g->is_finite()) {
    add("unit_multiplier_not_member", CheckResult::skipped());
    add("coproduct_value_not_member", CheckResult::skipped());
  } else {
    OracleMultiplier unit{"1", [](const Token&) { return Rational(1); }};
    const WindowMembership unit_membership = kg_membership(*g, unit, radius);
    add("unit_multiplier_not_member",
        unit_membership.member_within_window ? CheckResult::fail(Witness{})
                                             : CheckResult::pass(),
        "boundary support size " + std::to_string(unit_membership.boundary_support.size()));

    // The coproduct value D(d_m) lives on the pair window; its support line
    // s t = m leaves every finite window.
    Token target = "4";
    if (!g->valid_token(target) ||
        std::find(window.begin(), window.end(), target) == window.end()) {
      target = window.back();
    }
    bool boundary_hit = false;
    Index support_size = 0;
    for (const Token& s : window) {
      for (const Token& t : window) {
        if (g->multiply(s, t) != target) continue;
        ++support_size;
        if (g->on_boundary(s, radius) || g->on_boundary(t, radius)) boundary_hit = true;
      }
    }
    add("coproduct_value_not_member",
        boundary_hit ? CheckResult::pass() : CheckResult::fail(Witness{}),
        "target d_" + target + ", window support " + std::to_string(support_size));
  }

  Classification cls;
  cls.is_left = cls.is_right = cls.is_regular = !report.any_failure();
  for (const CheckEntry& e : report.entries) {
    if (e.status == Status::fail) {
      cls.first_failure = e.check;
      break;
    }
  }
  report.classification = cls;
  return report;
}

}  // namespace mhopf
