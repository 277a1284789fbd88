#pragma once

#include <string>

#include "cfe/linear_model.hpp"

namespace cfe {

/// Renders the model as free-format MPS: NAME, ROWS, COLUMNS (binaries
/// wrapped in INTORG/INTEND markers), RHS, BOUNDS, ENDATA. Emission order
/// follows insertion order and numbers carry 12 significant digits, so the
/// output is byte-identical across runs for the same model.
std::string emit_mps(const LinearModel& model,
                     const std::string& name = "CFE");

}  // namespace cfe
