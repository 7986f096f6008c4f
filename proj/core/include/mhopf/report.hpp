#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhopf/check.hpp"
#include "mhopf/coproduct.hpp"

namespace mhopf {

struct CheckEntry {
  std::string check;
  Status status = Status::skipped;
  std::optional<Witness> witness;
  std::int64_t duration_ms = 0;
  std::optional<std::string> detail;  // human-oriented hint, e.g. token names
};

struct DerivedData {
  Vec epsilon;
  Matrix antipode;
  Matrix antipode_inverse;
};

struct CheckReport {
  std::string instance;
  Index dimension = 0;
  Classification classification;
  std::vector<CheckEntry> entries;
  std::optional<DerivedData> derived;

  bool any_failure() const;
};

// 0 = everything passed, 1 = at least one axiom/derivation failed.  Input
// errors never reach a report; the CLI maps them to 2.
int exit_code(const CheckReport& report);

// Deterministic text rendering; prints the first failing witness expanded in
// basis labels with exact rationals.  Contains no timing fields.
std::string to_text(const CheckReport& report, const std::vector<std::string>& basis_labels);

}  // namespace mhopf
