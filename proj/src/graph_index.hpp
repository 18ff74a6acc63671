// SPDX-License-Identifier: Apache-2.0

// Dense integer views over the set-based network types, used by decoders
// that need fast adjacency queries.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "snc/network.hpp"

namespace snc::detail {

class DigraphIndex {
 public:
  explicit DigraphIndex(const DirectedNetwork& net) {
    ids_.reserve(net.vertex_count());
    for (const auto& v : net.vertices()) {
      index_.emplace(v, ids_.size());
      ids_.push_back(&v);
    }
    succ_.resize(ids_.size());
    pred_.resize(ids_.size());
    loop_.assign(ids_.size(), false);
    // Edges iterate in (from, to) order, which matches index order, so the
    // adjacency lists come out sorted.
    for (const auto& [from, to] : net.edges()) {
      const auto a = index_.at(from);
      const auto b = index_.at(to);
      if (a == b) {
        loop_[a] = true;
      } else {
        succ_[a].push_back(b);
        pred_[b].push_back(a);
      }
    }
    for (auto& p : pred_) std::sort(p.begin(), p.end());
  }

  std::size_t size() const noexcept { return ids_.size(); }
  const VertexId& id(std::size_t i) const { return *ids_[i]; }
  std::size_t index(const VertexId& v) const { return index_.at(v); }
  bool contains(const VertexId& v) const { return index_.contains(v); }

  const std::vector<std::size_t>& successors(std::size_t i) const { return succ_[i]; }
  const std::vector<std::size_t>& predecessors(std::size_t i) const { return pred_[i]; }
  bool has_loop(std::size_t i) const { return loop_[i]; }

  bool has_edge(std::size_t a, std::size_t b) const {
    if (a == b) return loop_[a];
    return std::binary_search(succ_[a].begin(), succ_[a].end(), b);
  }
  bool mutual(std::size_t a, std::size_t b) const {
    return a != b && has_edge(a, b) && has_edge(b, a);
  }
  std::size_t degree(std::size_t i) const {
    return succ_[i].size() + pred_[i].size() + (loop_[i] ? 2 : 0);
  }

 private:
  std::vector<const VertexId*> ids_;
  std::map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
  std::vector<bool> loop_;
};

class UgraphIndex {
 public:
  explicit UgraphIndex(const UndirectedNetwork& net) {
    ids_.reserve(net.vertex_count());
    for (const auto& v : net.vertices()) {
      index_.emplace(v, ids_.size());
      ids_.push_back(&v);
    }
    adj_.resize(ids_.size());
    loop_.assign(ids_.size(), false);
    for (const auto& e : net.edges()) {
      const auto a = index_.at(e.first());
      const auto b = index_.at(e.second());
      if (a == b) {
        loop_[a] = true;
      } else {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
      }
    }
    for (auto& n : adj_) std::sort(n.begin(), n.end());
  }

  std::size_t size() const noexcept { return ids_.size(); }
  const VertexId& id(std::size_t i) const { return *ids_[i]; }
  std::size_t index(const VertexId& v) const { return index_.at(v); }
  bool contains(const VertexId& v) const { return index_.contains(v); }

  /// Neighbors other than the vertex itself.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
  bool has_loop(std::size_t i) const { return loop_[i]; }
  bool has_edge(std::size_t a, std::size_t b) const {
    if (a == b) return loop_[a];
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }
  std::size_t degree(std::size_t i) const { return adj_[i].size() + (loop_[i] ? 2 : 0); }

 private:
  std::vector<const VertexId*> ids_;
  std::map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<bool> loop_;
};

}  // namespace snc::detail
