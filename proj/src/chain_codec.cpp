// SPDX-License-Identifier: Apache-2.0

#include "snc/chain_codec.hpp"

#include <map>

#include "snc/errors.hpp"

namespace snc {

ChainNetwork gamma(const BitString& bits, IdAllocator& fresh) {
  if (bits.empty()) throw Error("cannot encode an empty bitstring as a chain");
  ChainNetwork chain;
  chain.order.reserve(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    chain.order.push_back(fresh.next());
    chain.network.add_vertex(chain.order.back());
  }
  for (std::size_t k = 0; k < bits.size(); ++k) {
    const auto& b = chain.order[k];
    if (k + 1 < bits.size()) chain.network.add_edge(b, chain.order[k + 1]);
    if (bits[k]) chain.network.add_edge(b, b);
  }
  return chain;
}

BitString gamma_inv(const DirectedNetwork& chain) {
  if (chain.empty()) throw NotChainShapedError("empty network has no Hamiltonian path");

  std::map<VertexId, const VertexId*> successor;
  std::map<VertexId, std::size_t> in_degree;
  for (const auto& [from, to] : chain.edges()) {
    if (from == to) continue;
    if (!successor.emplace(from, &to).second) {
      throw NotChainShapedError("vertex has more than one outgoing chain edge");
    }
    if (++in_degree[to] > 1) {
      throw NotChainShapedError("vertex has more than one incoming chain edge");
    }
  }

  const VertexId* source = nullptr;
  for (const auto& v : chain.vertices()) {
    if (in_degree.contains(v)) continue;
    if (source != nullptr) throw NotChainShapedError("chain has more than one start");
    source = &v;
  }
  if (source == nullptr) throw NotChainShapedError("chain edges form a cycle");

  BitString bits;
  const VertexId* current = source;
  for (;;) {
    bits.push_back(chain.has_edge(*current, *current));
    auto next = successor.find(*current);
    if (next == successor.end()) break;
    current = next->second;
    // in-degree <= 1 and the source has none, so the walk cannot revisit.
  }
  if (bits.size() != chain.vertex_count()) {
    throw NotChainShapedError("path from the start does not reach every vertex");
  }
  return bits;
}

}  // namespace snc
