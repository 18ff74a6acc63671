// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "snc/id_allocator.hpp"
#include "snc/label_codec.hpp"
#include "snc/network.hpp"

namespace snc {

/// Whole-network byte form: one `subject label object\n` line per triple,
/// lines sorted. Equal networks give identical bytes.
std::string serialize_canonical(const SemanticNetwork& net);

/// Strict inverse of serialize_canonical(): rejects anything that would not
/// be reproduced byte for byte (unsorted lines, duplicates, extra spaces).
SemanticNetwork parse_canonical(std::string_view bytes);

/// Bits of the canonical serialization, MSB first.
BitString canonical_bits(const SemanticNetwork& net);

/// The canonical serialization laid out as one chain, 8 vertices per byte.
/// An empty network gives an empty directed network.
DirectedNetwork encode_network_as_chain(const SemanticNetwork& net, IdAllocator& fresh);

/// hat_theta() of encode_network_as_chain().
UndirectedNetwork encode_network_as_undirected_chain(const SemanticNetwork& net,
                                                     IdAllocator& fresh);

// Inverses of the two encoders. Non-chain shape, a bit count that is not a
// multiple of 8, and non-canonical bytes all raise NotDecodableError.
SemanticNetwork decode_network_from_chain(const DirectedNetwork& chain);
SemanticNetwork decode_network_from_chain(const UndirectedNetwork& chain);

}  // namespace snc
