// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "snc/id_allocator.hpp"
#include "snc/network.hpp"

namespace snc {

/// The five-edge subgraph standing in for one directed edge tail -> head:
/// {tail,x}, {x,y}, {x,z}, {y,head}, {z,head}. The tail sees one gadget
/// edge, the head sees two.
struct DirectionGadget {
  VertexId tail;
  VertexId head;
  VertexId x;
  VertexId y;
  VertexId z;
};

/// Encodes a directed network as an undirected one. Every vertex gets a
/// marker self-loop {v,v}; every directed edge, self-loops included, becomes
/// a fresh DirectionGadget. The result has |V| + 3|D| vertices and
/// |V| + 5|D| edges.
UndirectedNetwork hat_theta(const DirectedNetwork& net, IdAllocator& fresh);

/// True iff pairwise-distinct x, y, z exist, none equal to `tail` or `head`
/// and none carrying a self-loop, such that all five gadget edges are
/// present, x has degree 3 and y, z have degree 2.
bool q_plus(const UndirectedNetwork& net, const VertexId& tail, const VertexId& head);

/// Inverse of hat_theta(). Marker vertices become the directed vertex set;
/// each matched gadget becomes one directed edge. Every non-marker vertex and
/// every edge must belong to exactly one gadget, otherwise
/// NotDecodableError is thrown.
DirectedNetwork hat_theta_inv(const UndirectedNetwork& net);

}  // namespace snc
