#pragma once

namespace tlc {

/// Selects between the OpenMP kernel and its serial reference. Both return
/// identical results; the serial path is kept for testing and benchmarks.
enum class Execution { serial, parallel };

}  // namespace tlc
