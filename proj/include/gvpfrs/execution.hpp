#pragma once

namespace gvpfrs {

/// Which kernel family evaluates per-anchor work. Both produce bit-identical
/// results; `serial` is the reference the OpenMP kernels are tested against.
enum class Execution { parallel, serial };

}  // namespace gvpfrs
