#include "mhopf/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

using nlohmann::json;

Rational parse_coefficient(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    auto r = Rational::parse(j.get<std::string>());
    if (!r) throw InputError(where + ": malformed rational '" + j.get<std::string>() + "'");
    return *r;
  }
  throw InputError(where + ": coefficient must be an integer or a rational string");
}

Index parse_index(const json& j, Index bound, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(where + ": index must be a non-negative integer");
  }
  const auto v = j.get<unsigned long long>();
  if (v >= bound) {
    throw InputError(where + ": index " + std::to_string(v) + " out of range (dimension " +
                     std::to_string(bound) + ")");
  }
  return static_cast<Index>(v);
}

Matrix parse_action(const json& j, Index dim, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": action must be an array of entries");
  Matrix m(dim, dim);
  for (const json& e : j) {
    if (!e.is_object() || !e.contains("r") || !e.contains("c") || !e.contains("v")) {
      throw InputError(where + ": action entries need fields r, c, v");
    }
    m.add_to(parse_index(e["r"], dim, where), parse_index(e["c"], dim, where),
             parse_coefficient(e["v"], where));
  }
  return m;
}

json action_to_json(const Matrix& m) {
  json out = json::array();
  m.for_each_nonzero([&](Index r, Index c, const Rational& v) {
    out.push_back({{"r", r}, {"c", c}, {"v", v.str()}});
  });
  return out;
}

json witness_to_json(const Witness& w) {
  json out;
  out["indices"] = w.indices;
  json residual = json::array();
  for (const Rational& v : w.residual) residual.push_back(v.str());
  out["residual"] = residual;
  return out;
}

}  // namespace

Instance parse_instance_json(const std::string& text, Index max_dim) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_unsigned()) {
    throw InputError("instance needs an unsigned 'dimension'");
  }
  const Index dim = j["dimension"].get<Index>();
  if (dim == 0) throw InputError("dimension must be positive");
  if (dim > max_dim) {
    throw InputError("dimension " + std::to_string(dim) + " exceeds the limit " +
                     std::to_string(max_dim));
  }
  std::string name = j.value("name", std::string("unnamed"));

  std::vector<std::string> labels;
  if (j.contains("basis_labels")) {
    if (!j["basis_labels"].is_array()) throw InputError("basis_labels must be an array");
    for (const json& l : j["basis_labels"]) {
      if (!l.is_string()) throw InputError("basis_labels entries must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != dim) throw InputError("basis_labels length must equal the dimension");
  }

  if (!j.contains("product") || !j["product"].is_array()) {
    throw InputError("instance needs a 'product' array of structure constants");
  }
  std::vector<StructureTriple> triples;
  for (const json& t : j["product"]) {
    if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("k") ||
        !t.contains("c")) {
      throw InputError("product entries need fields i, j, k, c");
    }
    triples.push_back({parse_index(t["i"], dim, "product"), parse_index(t["j"], dim, "product"),
                       parse_index(t["k"], dim, "product"), parse_coefficient(t["c"], "product")});
  }
  AlgebraRef algebra = FiniteAlgebra::create(dim, triples, labels, name);

  if (!j.contains("coproduct") || !j["coproduct"].is_object()) {
    throw InputError("instance needs a 'coproduct' object");
  }
  const json& cp = j["coproduct"];
  const std::string kind = cp.value("kind", std::string());
  if (!cp.contains("values") || !cp["values"].is_array() || cp["values"].size() != dim) {
    throw InputError("coproduct needs a 'values' array with one entry per basis element");
  }
  TensorSquare sq = TensorSquare::build(algebra, max_dim);
  if (kind == "element") {
    std::vector<Vec> tensors;
    for (const json& val : cp["values"]) {
      if (!val.is_array()) throw InputError("element coproduct values must be entry arrays");
      Vec t(dim * dim);
      for (const json& e : val) {
        if (!e.is_object() || !e.contains("p") || !e.contains("q") || !e.contains("c")) {
          throw InputError("coproduct tensor entries need fields p, q, c");
        }
        t[pair_index(parse_index(e["p"], dim, "coproduct"),
                     parse_index(e["q"], dim, "coproduct"), dim)] +=
            parse_coefficient(e["c"], "coproduct");
      }
      tensors.push_back(std::move(t));
    }
    return {std::move(name), algebra,
            Coproduct::element_valued(std::move(sq), std::move(tensors))};
  }
  if (kind == "multiplier") {
    std::vector<std::pair<Matrix, Matrix>> actions;
    for (const json& val : cp["values"]) {
      if (!val.is_object() || !val.contains("left") || !val.contains("right")) {
        throw InputError("multiplier coproduct values need 'left' and 'right' actions");
      }
      actions.emplace_back(parse_action(val["left"], dim * dim, "coproduct.left"),
                           parse_action(val["right"], dim * dim, "coproduct.right"));
    }
    return {std::move(name), algebra,
            Coproduct::multiplier_valued(std::move(sq), std::move(actions))};
  }
  throw InputError("coproduct kind must be 'element' or 'multiplier'");
}

Instance load_instance_file(const std::string& path, Index max_dim) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_json(buffer.str(), max_dim);
}

std::string serialize_instance_json(const Instance& instance) {
  json j;
  j["name"] = instance.name;
  const Index dim = instance.algebra->dimension();
  j["dimension"] = dim;
  j["basis_labels"] = instance.algebra->basis_labels();
  json product = json::array();
  for (const StructureTriple& t : instance.algebra->triples()) {
    product.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", t.c.str()}});
  }
  j["product"] = product;
  json cp;
  if (instance.coproduct.element_tensors()) {
    cp["kind"] = "element";
    json values = json::array();
    for (const Vec& t : *instance.coproduct.element_tensors()) {
      json entries = json::array();
      for (Index pq = 0; pq < t.size(); ++pq) {
        if (t[pq].is_zero()) continue;
        const auto [p, q] = split_pair(pq, dim);
        entries.push_back({{"p", p}, {"q", q}, {"c", t[pq].str()}});
      }
      values.push_back(entries);
    }
    cp["values"] = values;
  } else {
    cp["kind"] = "multiplier";
    json values = json::array();
    for (Index i = 0; i < dim; ++i) {
      const Multiplier& m = instance.coproduct.value(i);
      values.push_back({{"left", action_to_json(m.left_action())},
                        {"right", action_to_json(m.right_action())}});
    }
    cp["values"] = values;
  }
  j["coproduct"] = cp;
  return j.dump(2) + "\n";
}

std::string serialize_report_json(const CheckReport& report,
                                  const std::vector<std::string>& basis_labels) {
  json j;
  j["instance"] = report.instance;
  j["dimension"] = report.dimension;
  j["basis_labels"] = basis_labels;
  json cls;
  cls["left"] = report.classification.is_left;
  cls["right"] = report.classification.is_right;
  cls["regular"] = report.classification.is_regular;
  if (report.classification.first_failure) {
    cls["first_failure"] = *report.classification.first_failure;
  } else {
    cls["first_failure"] = nullptr;
  }
  j["classification"] = cls;
  json checks = json::array();
  for (const CheckEntry& e : report.entries) {
    json entry;
    entry["check"] = e.check;
    entry["status"] = status_name(e.status);
    entry["duration_ms"] = e.duration_ms;
    if (e.witness) entry["witness"] = witness_to_json(*e.witness);
    if (e.detail) entry["detail"] = *e.detail;
    checks.push_back(entry);
  }
  j["checks"] = checks;
  if (report.derived) {
    json derived;
    json eps = json::array();
    for (const Rational& v : report.derived->epsilon) eps.push_back(v.str());
    derived["epsilon"] = eps;
    auto matrix_json = [](const Matrix& m) {
      json rows = json::array();
      for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
      }
      return rows;
    };
    derived["antipode"] = matrix_json(report.derived->antipode);
    derived["antipode_inverse"] = matrix_json(report.derived->antipode_inverse);
    j["derived"] = derived;
  }
  j["result"] = report.any_failure() ? "fail" : "pass";
  j["exit_code"] = exit_code(report);
  return j.dump(2) + "\n";
}

}  // namespace mhopf
