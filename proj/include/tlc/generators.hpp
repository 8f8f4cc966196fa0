#pragma once

#include <cstdint>

#include "tlc/graph.hpp"

namespace tlc {

/// Attaches ell cycles of length k + 2 at the lowest-id vertex v*, each
/// through k + 1 new vertices (ids above max_vertex). (G, k) contracts to a
/// tree within budget k iff the result is a yes-instance of T_ell.
/// Requires g connected, ell >= 1 and k >= 1 (k = 0 would need 2-cycles).
Instance gen_hardness_gadget(const Graph& g, int k, int ell);

/// G(n, p) on vertices 1..n, resampled until connected. Deterministic in the
/// seed. Throws SizeError for n > 200 and InputError for p outside (0, 1].
Instance gen_random_instance(int n, double edge_prob, int k, int ell, std::uint64_t seed);

}  // namespace tlc
