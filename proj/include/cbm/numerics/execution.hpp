#pragma once

namespace cbm {

// Selects between the serial reference loop and the OpenMP kernel for the
// data-parallel operations. Both paths evaluate the same per-node values and
// reduce them in the same fixed order, so results are bitwise identical.
enum class Execution { Serial, Parallel };

}  // namespace cbm
