// SPDX-License-Identifier: Apache-2.0

#include "snc/network.hpp"

#include <algorithm>

namespace snc {

SemanticNetwork::SemanticNetwork(std::initializer_list<Triple> triples)
    : triples_(triples) {}

bool SemanticNetwork::insert(Triple t) {
  return triples_.insert(std::move(t)).second;
}

std::set<VertexId> SemanticNetwork::vertices() const {
  std::set<VertexId> out;
  for (const auto& t : triples_) {
    out.insert(t.subject);
    out.insert(t.object);
  }
  return out;
}

std::set<LabelId> SemanticNetwork::labels() const {
  std::set<LabelId> out;
  for (const auto& t : triples_) out.insert(t.label);
  return out;
}

DirectedNetwork::DirectedNetwork(std::initializer_list<DirectedEdge> edges) {
  for (const auto& [from, to] : edges) add_edge(from, to);
}

bool DirectedNetwork::add_vertex(const VertexId& v) {
  return vertices_.insert(v).second;
}

bool DirectedNetwork::add_edge(const VertexId& from, const VertexId& to) {
  vertices_.insert(from);
  vertices_.insert(to);
  return edges_.emplace(from, to).second;
}

bool DirectedNetwork::has_edge(const VertexId& from, const VertexId& to) const {
  return edges_.contains(DirectedEdge{from, to});
}

UndirectedEdge::UndirectedEdge(VertexId u, VertexId v)
    : first_(std::move(u)), second_(std::move(v)) {
  if (second_ < first_) std::swap(first_, second_);
}

UndirectedNetwork::UndirectedNetwork(std::initializer_list<UndirectedEdge> edges) {
  for (const auto& e : edges) add_edge(e.first(), e.second());
}

bool UndirectedNetwork::add_vertex(const VertexId& v) {
  return vertices_.insert(v).second;
}

bool UndirectedNetwork::add_edge(const VertexId& u, const VertexId& v) {
  vertices_.insert(u);
  vertices_.insert(v);
  return edges_.emplace(u, v).second;
}

bool UndirectedNetwork::has_edge(const VertexId& u, const VertexId& v) const {
  return edges_.contains(UndirectedEdge(u, v));
}

std::string_view to_string(NetworkKind kind) noexcept {
  switch (kind) {
    case NetworkKind::semantic:
      return "semnet";
    case NetworkKind::directed:
      return "digraph";
    case NetworkKind::undirected:
      return "ugraph";
  }
  return "unknown";
}

NetworkKind kind_of(const AnyNetwork& net) noexcept {
  switch (net.index()) {
    case 0:
      return NetworkKind::semantic;
    case 1:
      return NetworkKind::directed;
    default:
      return NetworkKind::undirected;
  }
}

std::size_t total_degree(const DirectedNetwork& net, const VertexId& v) {
  if (!net.has_vertex(v)) {
    throw UnknownVertexError("vertex '" + v.str() + "' is not in the network");
  }
  std::size_t deg = 0;
  for (const auto& [from, to] : net.edges()) {
    deg += static_cast<std::size_t>(from == v) + static_cast<std::size_t>(to == v);
  }
  return deg;
}

std::size_t degree(const UndirectedNetwork& net, const VertexId& v) {
  if (!net.has_vertex(v)) {
    throw UnknownVertexError("vertex '" + v.str() + "' is not in the network");
  }
  std::size_t deg = 0;
  for (const auto& e : net.edges()) {
    deg += static_cast<std::size_t>(e.first() == v) +
           static_cast<std::size_t>(e.second() == v);
  }
  return deg;
}

namespace {

// Checks totality and injectivity of `mapping` restricted to `vertices`.
void check_bijection(const std::set<VertexId>& vertices, const VertexMapping& mapping) {
  std::set<VertexId> images;
  for (const auto& v : vertices) {
    auto it = mapping.find(v);
    if (it == mapping.end()) {
      throw RelabelError("mapping has no image for vertex '" + v.str() + "'");
    }
    if (!images.insert(it->second).second) {
      throw RelabelError("mapping is not injective: '" + it->second.str() +
                         "' is hit twice");
    }
  }
}

}  // namespace

SemanticNetwork relabel(const SemanticNetwork& net, const VertexMapping& mapping) {
  check_bijection(net.vertices(), mapping);
  SemanticNetwork out;
  for (const auto& t : net.triples()) {
    out.insert({mapping.at(t.subject), t.label, mapping.at(t.object)});
  }
  return out;
}

DirectedNetwork relabel(const DirectedNetwork& net, const VertexMapping& mapping) {
  check_bijection(net.vertices(), mapping);
  DirectedNetwork out;
  for (const auto& v : net.vertices()) out.add_vertex(mapping.at(v));
  for (const auto& [from, to] : net.edges()) {
    out.add_edge(mapping.at(from), mapping.at(to));
  }
  return out;
}

UndirectedNetwork relabel(const UndirectedNetwork& net, const VertexMapping& mapping) {
  check_bijection(net.vertices(), mapping);
  UndirectedNetwork out;
  for (const auto& v : net.vertices()) out.add_vertex(mapping.at(v));
  for (const auto& e : net.edges()) {
    out.add_edge(mapping.at(e.first()), mapping.at(e.second()));
  }
  return out;
}

AnyNetwork relabel(const AnyNetwork& net, const VertexMapping& mapping) {
  return std::visit([&](const auto& n) -> AnyNetwork { return relabel(n, mapping); },
                    net);
}

bool equal_networks(const AnyNetwork& a, const AnyNetwork& b) {
  if (a.index() != b.index()) {
    throw KindMismatchError("cannot compare a " + std::string(to_string(kind_of(a))) +
                            " with a " + std::string(to_string(kind_of(b))));
  }
  return a == b;
}

VertexMapping invert(const VertexMapping& mapping) {
  VertexMapping out;
  for (const auto& [from, to] : mapping) {
    if (!out.emplace(to, from).second) {
      throw RelabelError("mapping is not injective: '" + to.str() + "' is hit twice");
    }
  }
  return out;
}

}  // namespace snc
