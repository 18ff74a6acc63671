// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string_view>
#include <utility>
#include <variant>

#include "snc/token.hpp"

namespace snc {

/// One labeled, directed edge ⟨subject, label, object⟩.
struct Triple {
  VertexId subject;
  LabelId label;
  VertexId object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// A set of triples. The vertex set is implied by the triples, so a semantic
/// network cannot hold isolated vertices.
class SemanticNetwork {
 public:
  SemanticNetwork() = default;
  SemanticNetwork(std::initializer_list<Triple> triples);

  /// Returns false if the triple was already present.
  bool insert(Triple t);
  bool contains(const Triple& t) const { return triples_.contains(t); }

  const std::set<Triple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  std::set<VertexId> vertices() const;
  std::set<LabelId> labels() const;

  friend auto operator<=>(const SemanticNetwork&, const SemanticNetwork&) = default;
  friend bool operator==(const SemanticNetwork&, const SemanticNetwork&) = default;

 private:
  std::set<Triple> triples_;
};

using DirectedEdge = std::pair<VertexId, VertexId>;

/// Explicit vertex set plus ordered vertex pairs. Self-loops allowed,
/// parallel edges are not.
class DirectedNetwork {
 public:
  DirectedNetwork() = default;
  DirectedNetwork(std::initializer_list<DirectedEdge> edges);

  bool add_vertex(const VertexId& v);
  /// Adds both endpoints to the vertex set. Returns false on a duplicate.
  bool add_edge(const VertexId& from, const VertexId& to);

  bool has_vertex(const VertexId& v) const { return vertices_.contains(v); }
  bool has_edge(const VertexId& from, const VertexId& to) const;

  const std::set<VertexId>& vertices() const noexcept { return vertices_; }
  const std::set<DirectedEdge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  friend auto operator<=>(const DirectedNetwork&, const DirectedNetwork&) = default;
  friend bool operator==(const DirectedNetwork&, const DirectedNetwork&) = default;

 private:
  std::set<VertexId> vertices_;
  std::set<DirectedEdge> edges_;
};

/// Unordered vertex pair, stored with the smaller token first.
class UndirectedEdge {
 public:
  UndirectedEdge(VertexId u, VertexId v);

  const VertexId& first() const noexcept { return first_; }
  const VertexId& second() const noexcept { return second_; }
  bool is_loop() const noexcept { return first_ == second_; }

  friend auto operator<=>(const UndirectedEdge&, const UndirectedEdge&) = default;
  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;

 private:
  VertexId first_;
  VertexId second_;
};

class UndirectedNetwork {
 public:
  UndirectedNetwork() = default;
  UndirectedNetwork(std::initializer_list<UndirectedEdge> edges);

  bool add_vertex(const VertexId& v);
  bool add_edge(const VertexId& u, const VertexId& v);

  bool has_vertex(const VertexId& v) const { return vertices_.contains(v); }
  bool has_edge(const VertexId& u, const VertexId& v) const;

  const std::set<VertexId>& vertices() const noexcept { return vertices_; }
  const std::set<UndirectedEdge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  friend auto operator<=>(const UndirectedNetwork&, const UndirectedNetwork&) = default;
  friend bool operator==(const UndirectedNetwork&, const UndirectedNetwork&) = default;

 private:
  std::set<VertexId> vertices_;
  std::set<UndirectedEdge> edges_;
};

enum class NetworkKind { semantic, directed, undirected };

std::string_view to_string(NetworkKind kind) noexcept;

using AnyNetwork = std::variant<SemanticNetwork, DirectedNetwork, UndirectedNetwork>;

NetworkKind kind_of(const AnyNetwork& net) noexcept;

/// In-degree plus out-degree; a self-loop counts twice.
std::size_t total_degree(const DirectedNetwork& net, const VertexId& v);

/// Number of incident edge ends; a self-loop counts twice.
std::size_t degree(const UndirectedNetwork& net, const VertexId& v);

using VertexMapping = std::map<VertexId, VertexId>;

// Renames vertices. The mapping must cover every vertex of `net` and be
// injective on it; extra keys are ignored. Labels are never renamed.
SemanticNetwork relabel(const SemanticNetwork& net, const VertexMapping& mapping);
DirectedNetwork relabel(const DirectedNetwork& net, const VertexMapping& mapping);
UndirectedNetwork relabel(const UndirectedNetwork& net, const VertexMapping& mapping);
AnyNetwork relabel(const AnyNetwork& net, const VertexMapping& mapping);

/// Exact, ID-sensitive equality. Throws KindMismatchError when `a` and `b`
/// hold different network kinds.
bool equal_networks(const AnyNetwork& a, const AnyNetwork& b);

/// Inverse of a bijective mapping.
VertexMapping invert(const VertexMapping& mapping);

}  // namespace snc
