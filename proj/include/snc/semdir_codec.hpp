// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <set>
#include <vector>

#include "snc/id_allocator.hpp"
#include "snc/label_codec.hpp"
#include "snc/network.hpp"

namespace snc {

/// A candidate encoded triple inside a directed network:
/// subject <-> b1 -> b2 -> ... -> bn <-> object.
struct LabelPath {
  VertexId subject;
  std::vector<VertexId> chain;
  VertexId object;

  friend auto operator<=>(const LabelPath&, const LabelPath&) = default;
  friend bool operator==(const LabelPath&, const LabelPath&) = default;
};

/// Encodes a semantic network as a directed network. Each triple
/// ⟨i, ω, j⟩ becomes a fresh chain for the label's code, tied to i and j by
/// mutual edge pairs (i,b1),(b1,i) and (bn,j),(j,bn).
///
/// Every label must be in `codebook` (UnknownLabelError otherwise). The
/// result has |V^s| + L·|S| vertices and Σ (L + 3 + popcount(code)) edges.
DirectedNetwork theta(const SemanticNetwork& net, const Codebook& codebook,
                      IdAllocator& fresh);

/// Vertices with even total degree, no self-loop, and at least one mutual
/// edge partner. On encoder output this is exactly the original vertex set.
std::set<VertexId> classify_original_vertices(const DirectedNetwork& net);

struct ChainLengthBounds {
  std::size_t min = 2;
  std::size_t max = std::numeric_limits<std::size_t>::max();
};

/// All paths subject <-> b1 -> ... -> bn <-> object where subject and object
/// are in `originals`, the b's are distinct from each other and from both
/// endpoints, and no b has an edge back to an earlier b (which would close a
/// cycle among them). Subject and object may coincide. Returned sorted.
std::vector<LabelPath> enumerate_label_paths(const DirectedNetwork& net,
                                             const std::set<VertexId>& originals,
                                             ChainLengthBounds bounds = {});

/// Inverse of theta(). The input is validated: every vertex and edge must be
/// accounted for by exactly one label path of length `codebook.width()`
/// whose bits decode to a label, otherwise NotDecodableError is thrown.
SemanticNetwork theta_inv(const DirectedNetwork& net, const Codebook& codebook);

}  // namespace snc
