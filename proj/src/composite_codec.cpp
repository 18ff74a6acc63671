// SPDX-License-Identifier: Apache-2.0

#include "snc/composite_codec.hpp"

#include "snc/dirund_codec.hpp"
#include "snc/semdir_codec.hpp"

namespace snc {

UndirectedNetwork upsilon(const SemanticNetwork& net, const Codebook& codebook,
                          IdAllocator& fresh) {
  return hat_theta(theta(net, codebook, fresh), fresh);
}

SemanticNetwork upsilon_inv(const UndirectedNetwork& net, const Codebook& codebook) {
  // Each stage tags its own errors.
  return theta_inv(hat_theta_inv(net), codebook);
}

bool GrowthReport::within_bounds() const {
  return directed.vertices <= directed_upper.vertices &&
         directed.edges <= directed_upper.edges &&
         undirected.vertices <= undirected_upper.vertices &&
         undirected.edges <= undirected_upper.edges;
}

bool GrowthReport::matches_exact() const {
  return directed == directed_exact && undirected == undirected_exact;
}

GrowthReport growth_report(const SemanticNetwork& net, const Codebook& codebook) {
  GrowthReport r;
  r.semantic_vertices = net.vertices().size();
  r.triples = net.size();
  r.alphabet_size = codebook.size();
  r.width = codebook.width();

  IdAllocator fresh;
  const auto d = theta(net, codebook, fresh);
  const auto u = hat_theta(d, fresh);
  r.directed = {d.vertex_count(), d.edge_count()};
  r.undirected = {u.vertex_count(), u.edge_count()};

  const auto vs = r.semantic_vertices;
  const auto s = r.triples;
  const auto L = r.width;
  std::size_t chain_edges = 0;
  for (const auto& t : net.triples()) {
    chain_edges += L + 3 + codebook.encode(t.label).popcount();
  }
  r.directed_exact = {vs + L * s, chain_edges};
  r.undirected_exact = {r.directed_exact.vertices + 3 * r.directed_exact.edges,
                        r.directed_exact.vertices + 5 * r.directed_exact.edges};
  r.directed_upper = {vs + L * s, s * (2 * L + 3)};
  r.undirected_upper = {vs + 7 * s * L + 9 * s, vs + 11 * s * L + 15 * s};
  return r;
}

SelfLoopTaxonomy self_loop_taxonomy(const UndirectedNetwork& net, const Codebook& codebook) {
  const auto directed = hat_theta_inv(net);
  const auto semantic = theta_inv(directed, codebook);
  SelfLoopTaxonomy out;
  out.undirected = directed.vertex_count();
  for (const auto& [tail, head] : directed.edges()) {
    if (tail == head) ++out.directed;
  }
  for (const auto& t : semantic.triples()) {
    if (t.subject == t.object) ++out.semantic;
  }
  return out;
}

}  // namespace snc
