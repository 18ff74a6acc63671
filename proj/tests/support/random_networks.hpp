// SPDX-License-Identifier: Apache-2.0

// Seeded random network generators shared by the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "snc/label_codec.hpp"
#include "snc/network.hpp"

namespace snc::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<VertexId> vertex_pool(std::size_t n, const std::string& prefix = "v") {
  std::vector<VertexId> out;
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(prefix + std::to_string(k));
  return out;
}

inline std::set<LabelId> label_pool(std::size_t n, const std::string& prefix = "p") {
  std::set<LabelId> out;
  for (std::size_t k = 0; k < n; ++k) out.emplace(prefix + std::to_string(k));
  return out;
}

struct SemanticCase {
  SemanticNetwork network;
  Codebook codebook;
};

/// Random semantic network over at most `max_vertices` vertices and
/// `max_labels` labels with at most `max_triples` triples. The codebook
/// covers the whole label pool, so some labels may go unused.
inline SemanticCase random_semantic(Rng& rng, std::size_t max_vertices,
                                    std::size_t max_labels, std::size_t max_triples) {
  const auto vertices = vertex_pool(uniform(rng, 1, max_vertices));
  const auto label_set = label_pool(uniform(rng, 1, max_labels));
  const std::vector<LabelId> labels(label_set.begin(), label_set.end());
  SemanticNetwork net;
  const auto target = uniform(rng, 0, max_triples);
  for (std::size_t k = 0; k < target; ++k) {
    net.insert({vertices[uniform(rng, 0, vertices.size() - 1)],
                labels[uniform(rng, 0, labels.size() - 1)],
                vertices[uniform(rng, 0, vertices.size() - 1)]});
  }
  return {std::move(net), Codebook::build(label_set)};
}

/// Random directed network with isolated vertices, self-loops and mutual
/// pairs all possible.
inline DirectedNetwork random_directed(Rng& rng, std::size_t max_vertices,
                                       std::size_t max_edges) {
  const auto vertices = vertex_pool(uniform(rng, 1, max_vertices));
  DirectedNetwork net;
  for (const auto& v : vertices) net.add_vertex(v);
  const auto target = uniform(rng, 0, max_edges);
  for (std::size_t k = 0; k < target; ++k) {
    net.add_edge(vertices[uniform(rng, 0, vertices.size() - 1)],
                 vertices[uniform(rng, 0, vertices.size() - 1)]);
  }
  return net;
}

inline UndirectedNetwork random_undirected(Rng& rng, std::size_t max_vertices,
                                           std::size_t max_edges) {
  const auto vertices = vertex_pool(uniform(rng, 1, max_vertices));
  UndirectedNetwork net;
  for (const auto& v : vertices) net.add_vertex(v);
  const auto target = uniform(rng, 0, max_edges);
  for (std::size_t k = 0; k < target; ++k) {
    net.add_edge(vertices[uniform(rng, 0, vertices.size() - 1)],
                 vertices[uniform(rng, 0, vertices.size() - 1)]);
  }
  return net;
}

/// Bijection from `vertices` onto freshly shuffled names `r0..r{n-1}`, so
/// the sort order of the renamed vertices is unrelated to the original.
inline VertexMapping random_renaming(const std::set<VertexId>& vertices, Rng& rng) {
  std::vector<std::size_t> slots(vertices.size());
  for (std::size_t k = 0; k < slots.size(); ++k) slots[k] = k;
  std::shuffle(slots.begin(), slots.end(), rng);
  VertexMapping out;
  std::size_t k = 0;
  for (const auto& v : vertices) out.emplace(v, VertexId("r" + std::to_string(slots[k++])));
  return out;
}

inline BitString random_bits(Rng& rng, std::size_t length) {
  BitString out;
  for (std::size_t k = 0; k < length; ++k) out.push_back(uniform(rng, 0, 1) == 1);
  return out;
}

}  // namespace snc::testing
