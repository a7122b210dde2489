#pragma once

namespace terrapn {

// Execution policy for the data-parallel kernels. Both paths share the same
// per-element functions, so results are bit-identical; the serial path is the
// reference the tests compare against.
enum class Exec { serial, parallel };

}  // namespace terrapn
