// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "snc/id_allocator.hpp"
#include "snc/label_codec.hpp"
#include "snc/network.hpp"

namespace snc {

/// Semantic network straight to an undirected network:
/// hat_theta(theta(net)). Both stages draw IDs from `fresh`.
UndirectedNetwork upsilon(const SemanticNetwork& net, const Codebook& codebook,
                          IdAllocator& fresh);

/// theta_inv(hat_theta_inv(net)). A NotDecodableError carries the stage
/// that rejected the input ("direction" or "semantic").
SemanticNetwork upsilon_inv(const UndirectedNetwork& net, const Codebook& codebook);

struct Counts {
  std::size_t vertices = 0;
  std::size_t edges = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Size of a semantic network and of both of its encodings.
struct GrowthReport {
  std::size_t semantic_vertices = 0;
  std::size_t triples = 0;
  std::size_t alphabet_size = 0;
  std::size_t width = 0;

  Counts directed;           // measured on theta(S)
  Counts undirected;         // measured on upsilon(S)
  Counts directed_exact;     // |V^s| + L|S|, Σ (L + 3 + popcount)
  Counts undirected_exact;   // |V^D| + 3|E^D|, |V^D| + 5|E^D|
  Counts directed_upper;     // |V^s| + L|S|, |S|(2L + 3)
  Counts undirected_upper;   // |V^s| + 7|S|L + 9|S|, |V^s| + 11|S|L + 15|S|

  bool within_bounds() const;
  bool matches_exact() const;
};

GrowthReport growth_report(const SemanticNetwork& net, const Codebook& codebook);

/// The three kinds of self-loop visible in an encoded network.
struct SelfLoopTaxonomy {
  std::size_t undirected = 0;  // marker loops {v,v}
  std::size_t directed = 0;    // gadgets whose tail is their head
  std::size_t semantic = 0;    // triples with subject == object

  friend bool operator==(const SelfLoopTaxonomy&, const SelfLoopTaxonomy&) = default;
};

/// Decodes `net` fully and counts each self-loop kind.
SelfLoopTaxonomy self_loop_taxonomy(const UndirectedNetwork& net, const Codebook& codebook);

}  // namespace snc
