#pragma once

#include <stdexcept>
#include <string>

namespace mhopf {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad files, invalid structure constants, dimension guard
// violations, mismatched algebras.  Maps to exit code 2 in the CLI.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// Internal invariant violation (e.g. an exact division that is not exact).
class LogicBug : public Error {
 public:
  explicit LogicBug(const std::string& what) : Error(what) {}
};

}  // namespace mhopf
