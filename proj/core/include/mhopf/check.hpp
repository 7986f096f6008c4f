#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhopf/error.hpp"
#include "mhopf/rational.hpp"

namespace mhopf {

enum class Status { pass, fail, skipped };

std::string status_name(Status s);

// Every negative verdict carries a concrete witness: the basis indices it was
// found at plus a residual vector (difference, annihilator, kernel vector or
// similar, depending on the check).
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<Rational> residual;
};

struct CheckResult {
  Status status = Status::skipped;
  std::optional<Witness> witness;

  static CheckResult pass() { return {Status::pass, std::nullopt}; }
  static CheckResult fail(Witness w) { return {Status::fail, std::move(w)}; }
  static CheckResult skipped() { return {Status::skipped, std::nullopt}; }

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }
};

// Raised by the derivation engine when one of its postconditions cannot be
// established.  Carries a machine-readable code ("not-scalar",
// "membership-failure", ...) plus the witness that triggered it.
class DerivationError : public Error {
 public:
  DerivationError(std::string code, Witness witness, const std::string& what)
      : Error(what), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const Witness& witness() const { return witness_; }

 private:
  std::string code_;
  Witness witness_;
};

}  // namespace mhopf
