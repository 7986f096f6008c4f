#pragma once

#include <string>

#include "mhopf/pipeline.hpp"

namespace mhopf {

// Instance files: {"name", "dimension", "basis_labels", "product":
// [{"i","j","k","c"}], "coproduct": {"kind": "element"|"multiplier",
// "values": ...}}.  Indices are 0-based, coefficients are exact rational
// strings, omitted entries are zero.  Parse errors raise InputError with a
// field diagnostic.
Instance parse_instance_json(const std::string& text, Index max_dim = 32);
Instance load_instance_file(const std::string& path, Index max_dim = 32);
std::string serialize_instance_json(const Instance& instance);

// Report serialization; durations are the only non-deterministic fields.
std::string serialize_report_json(const CheckReport& report,
                                  const std::vector<std::string>& basis_labels);

}  // namespace mhopf
