#include "mhopf/report.hpp"

#include <sstream>

namespace mhopf {

namespace {

constexpr std::size_t kMaxResidualTerms = 12;

std::string index_label(std::size_t idx, const std::vector<std::string>& labels) {
  if (idx < labels.size()) return labels[idx];
  return "#" + std::to_string(idx);
}

// Renders a residual vector as a linear combination.  Coordinates are mapped
// back to basis labels, tensor pairs or tensor triples by length.
std::string render_residual(const Vec& residual, const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  std::ostringstream out;
  std::size_t written = 0;
  for (std::size_t k = 0; k < residual.size(); ++k) {
    if (residual[k].is_zero()) continue;
    if (written == kMaxResidualTerms) {
      out << " + ...";
      break;
    }
    if (written > 0) out << " + ";
    out << residual[k].str() << "*";
    if (n > 0 && residual.size() == n * n) {
      out << "(" << index_label(k / n, labels) << "(x)" << index_label(k % n, labels) << ")";
    } else if (n > 0 && residual.size() == n * n * n) {
      out << "(" << index_label(k / (n * n), labels) << "(x)"
          << index_label((k / n) % n, labels) << "(x)" << index_label(k % n, labels) << ")";
    } else {
      out << index_label(k, labels);
    }
    ++written;
  }
  if (written == 0) return "0";
  return out.str();
}

std::string render_witness(const Witness& w, const std::vector<std::string>& labels) {
  std::ostringstream out;
  if (!w.indices.empty()) {
    out << "at (";
    for (std::size_t t = 0; t < w.indices.size(); ++t) {
      if (t > 0) out << ", ";
      out << index_label(w.indices[t], labels);
    }
    out << ")";
  }
  if (!w.residual.empty()) {
    if (!w.indices.empty()) out << "; ";
    out << "residual " << render_residual(w.residual, labels);
  }
  return out.str();
}

std::string render_functional(const Vec& coords, const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out << ", ";
    out << index_label(i, labels) << " -> " << coords[i].str();
  }
  return out.str();
}

std::string render_column(const Matrix& m, Index col, const std::vector<std::string>& labels) {
  std::ostringstream out;
  bool first = true;
  for (Index r = 0; r < m.rows(); ++r) {
    const Rational v = m.at(r, col);
    if (v.is_zero()) continue;
    if (!first) out << " + ";
    out << v.str() << "*" << index_label(r, labels);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

const char* status_tag(Status s) {
  switch (s) {
    case Status::pass:
      return "[pass]";
    case Status::fail:
      return "[FAIL]";
    case Status::skipped:
      return "[skip]";
  }
  return "[????]";
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

bool CheckReport::any_failure() const {
  for (const CheckEntry& e : entries) {
    if (e.status == Status::fail) return true;
  }
  return false;
}

int exit_code(const CheckReport& report) { return report.any_failure() ? 1 : 0; }

std::string to_text(const CheckReport& report, const std::vector<std::string>& basis_labels) {
  std::ostringstream out;
  out << "instance: " << report.instance << "\n";
  out << "dimension: " << report.dimension << "\n";
  out << "classification: left=" << (report.classification.is_left ? "yes" : "no")
      << " right=" << (report.classification.is_right ? "yes" : "no")
      << " regular=" << (report.classification.is_regular ? "yes" : "no") << "\n";
  if (report.classification.first_failure) {
    out << "first failure: " << *report.classification.first_failure << "\n";
  }
  out << "\nchecks:\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const CheckEntry& e : report.entries) {
    out << "  " << status_tag(e.status) << " " << e.check;
    if (e.detail) out << "  (" << *e.detail << ")";
    if (e.status == Status::fail && e.witness) {
      const std::string w = render_witness(*e.witness, basis_labels);
      if (!w.empty()) out << "  " << w;
    }
    out << "\n";
    switch (e.status) {
      case Status::pass:
        ++passed;
        break;
      case Status::fail:
        ++failed;
        break;
      case Status::skipped:
        ++skipped;
        break;
    }
  }
  if (report.derived) {
    out << "\nderived structure:\n";
    out << "  counit: " << render_functional(report.derived->epsilon, basis_labels) << "\n";
    for (Index i = 0; i < report.derived->antipode.cols(); ++i) {
      out << "  S(" << index_label(i, basis_labels)
          << ") = " << render_column(report.derived->antipode, i, basis_labels) << "\n";
    }
    for (Index i = 0; i < report.derived->antipode_inverse.cols(); ++i) {
      out << "  S'(" << index_label(i, basis_labels)
          << ") = " << render_column(report.derived->antipode_inverse, i, basis_labels) << "\n";
    }
  }
  out << "\nsummary: " << report.entries.size() << " checks, " << passed << " passed, "
      << failed << " failed, " << skipped << " skipped\n";
  out << "result: " << (report.any_failure() ? "FAIL" : "PASS") << "\n";
  return out.str();
}

}  // namespace mhopf
