#pragma once

namespace entkit {

// Execution mode for the data-parallel kernels (roof-optimizer restarts,
// fuzz batches, grid scans, vertex enumeration). The serial path is the
// reference implementation; both paths produce identical results because
// results are merged with an order-independent deterministic comparator.
enum class Exec { serial, parallel };

}  // namespace entkit
