// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "snc/id_allocator.hpp"
#include "snc/label_codec.hpp"
#include "snc/network.hpp"

namespace snc {

/// A bitstring laid out as a directed path b1 -> b2 -> ... -> bn where a
/// self-loop on bk marks bit k as 1.
struct ChainNetwork {
  DirectedNetwork network;
  std::vector<VertexId> order;
};

/// Builds the chain for a non-empty bitstring using fresh vertex IDs.
/// Vertex count is |bits|, edge count is (|bits| - 1) + popcount(bits).
ChainNetwork gamma(const BitString& bits, IdAllocator& fresh);

/// Reads the bits back along the chain's unique Hamiltonian path.
///
/// The input must be chain-shaped: one vertex with no incoming non-loop
/// edge, every vertex with at most one non-loop edge in and out, and the
/// walk from the source reaching every vertex. Anything else throws
/// NotChainShapedError. Vertex names are never inspected.
BitString gamma_inv(const DirectedNetwork& chain);

inline BitString gamma_inv(const ChainNetwork& chain) { return gamma_inv(chain.network); }

}  // namespace snc
