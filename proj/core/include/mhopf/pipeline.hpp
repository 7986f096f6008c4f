#pragma once

#include <string>

#include "mhopf/derive.hpp"
#include "mhopf/report.hpp"

namespace mhopf {

enum class Side { left, right, both };

struct PipelineOptions {
  Side side = Side::both;
  bool include_derived = false;  // attach epsilon and antipode dumps
};

// Instance = algebra plus coproduct, ready to verify.
struct Instance {
  std::string name;
  AlgebraRef algebra;
  Coproduct coproduct;
};

// Runs the fixed check sequence: axioms, then derivations on the selected
// side, then the miscellaneous structure checks.  Never throws on
// mathematical failure; every failing entry carries a witness.
CheckReport run_pipeline(const Instance& instance, const PipelineOptions& options = {});

}  // namespace mhopf
