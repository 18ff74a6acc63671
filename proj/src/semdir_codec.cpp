// SPDX-License-Identifier: Apache-2.0

#include "snc/semdir_codec.hpp"

#include <algorithm>
#include <utility>

#include "graph_index.hpp"
#include "snc/chain_codec.hpp"
#include "snc/errors.hpp"

namespace snc {

namespace {

constexpr const char* kStage = "semantic";

class PathSearch {
 public:
  PathSearch(const detail::DigraphIndex& graph, std::vector<bool> is_original,
             ChainLengthBounds bounds)
      : graph_(graph), is_original_(std::move(is_original)), bounds_(bounds) {}

  std::vector<LabelPath> run() {
    for (std::size_t i = 0; i < graph_.size(); ++i) {
      if (!is_original_[i]) continue;
      subject_ = i;
      for (auto b1 : graph_.successors(i)) {
        if (!graph_.mutual(i, b1)) continue;
        chain_.assign(1, b1);
        extend();
      }
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool in_chain(std::size_t v) const {
    return std::find(chain_.begin(), chain_.end(), v) != chain_.end();
  }

  void extend() {
    const auto tail = chain_.back();
    if (chain_.size() >= bounds_.min) {
      for (auto j : graph_.successors(tail)) {
        if (is_original_[j] && graph_.mutual(tail, j) && !in_chain(j)) emit(j);
      }
    }
    if (chain_.size() >= bounds_.max) return;
    for (auto next : graph_.successors(tail)) {
      if (next == subject_ || in_chain(next)) continue;
      const bool closes_cycle = std::any_of(chain_.begin(), chain_.end(), [&](auto b) {
        return graph_.has_edge(next, b);
      });
      if (closes_cycle) continue;
      chain_.push_back(next);
      extend();
      chain_.pop_back();
    }
  }

  void emit(std::size_t object) {
    LabelPath path{graph_.id(subject_), {}, graph_.id(object)};
    path.chain.reserve(chain_.size());
    for (auto b : chain_) path.chain.push_back(graph_.id(b));
    found_.push_back(std::move(path));
  }

  const detail::DigraphIndex& graph_;
  std::vector<bool> is_original_;
  ChainLengthBounds bounds_;
  std::size_t subject_ = 0;
  std::vector<std::size_t> chain_;
  std::vector<LabelPath> found_;
};

bool has_mutual_partner(const detail::DigraphIndex& graph, std::size_t v) {
  return std::any_of(graph.successors(v).begin(), graph.successors(v).end(),
                     [&](auto w) { return graph.mutual(v, w); });
}

}  // namespace

DirectedNetwork theta(const SemanticNetwork& net, const Codebook& codebook,
                      IdAllocator& fresh) {
  fresh.reserve_all(net.vertices());
  DirectedNetwork out;
  for (const auto& [subject, label, object] : net.triples()) {
    const auto chain = gamma(codebook.encode(label), fresh);
    const auto& first = chain.order.front();
    const auto& last = chain.order.back();
    for (const auto& v : chain.network.vertices()) out.add_vertex(v);
    for (const auto& [from, to] : chain.network.edges()) out.add_edge(from, to);
    out.add_edge(subject, first);
    out.add_edge(first, subject);
    out.add_edge(last, object);
    out.add_edge(object, last);
  }
  return out;
}

std::set<VertexId> classify_original_vertices(const DirectedNetwork& net) {
  const detail::DigraphIndex graph(net);
  std::set<VertexId> out;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (graph.degree(v) % 2 == 0 && !graph.has_loop(v) && has_mutual_partner(graph, v)) {
      out.insert(graph.id(v));
    }
  }
  return out;
}

std::vector<LabelPath> enumerate_label_paths(const DirectedNetwork& net,
                                             const std::set<VertexId>& originals,
                                             ChainLengthBounds bounds) {
  const detail::DigraphIndex graph(net);
  std::vector<bool> is_original(graph.size(), false);
  for (const auto& v : originals) {
    if (graph.contains(v)) is_original[graph.index(v)] = true;
  }
  return PathSearch(graph, std::move(is_original), bounds).run();
}

SemanticNetwork theta_inv(const DirectedNetwork& net, const Codebook& codebook) {
  const detail::DigraphIndex graph(net);
  const auto originals = classify_original_vertices(net);
  const auto paths =
      enumerate_label_paths(net, originals, {.min = 2, .max = codebook.width()});

  std::vector<bool> used(graph.size(), false);
  std::set<std::pair<std::size_t, std::size_t>> covered;
  auto cover = [&](std::size_t a, std::size_t b) {
    if (!covered.emplace(a, b).second) {
      throw NotDecodableError(kStage, "edge (" + graph.id(a).str() + ", " +
                                          graph.id(b).str() +
                                          ") belongs to more than one label path");
    }
  };

  SemanticNetwork out;
  for (const auto& path : paths) {
    if (path.chain.size() != codebook.width()) {
      throw NotDecodableError(kStage, "label chain from '" + path.subject.str() +
                                          "' has length " +
                                          std::to_string(path.chain.size()) +
                                          ", codebook width is " +
                                          std::to_string(codebook.width()));
    }
    std::vector<std::size_t> members;
    members.reserve(path.chain.size());
    for (const auto& b : path.chain) {
      const auto idx = graph.index(b);
      if (originals.contains(b) || used[idx]) {
        throw NotDecodableError(kStage, "vertex '" + b.str() +
                                            "' is shared between label paths");
      }
      used[idx] = true;
      members.push_back(idx);
    }

    // The chain is the subgraph induced by the path's gadget vertices.
    DirectedNetwork chain;
    for (auto a : members) {
      chain.add_vertex(graph.id(a));
      if (graph.has_loop(a)) {
        chain.add_edge(graph.id(a), graph.id(a));
        cover(a, a);
      }
      for (auto b : graph.successors(a)) {
        if (std::find(members.begin(), members.end(), b) == members.end()) continue;
        chain.add_edge(graph.id(a), graph.id(b));
        cover(a, b);
      }
    }
    const auto subject = graph.index(path.subject);
    const auto object = graph.index(path.object);
    used[subject] = true;
    used[object] = true;
    cover(subject, members.front());
    cover(members.front(), subject);
    cover(members.back(), object);
    cover(object, members.back());

    const auto bits = gamma_inv(chain);
    const LabelId* label = nullptr;
    try {
      label = &codebook.decode(bits);
    } catch (const CodebookError& e) {
      throw NotDecodableError(kStage, e.what());
    }
    if (!out.insert({path.subject, *label, path.object})) {
      throw NotDecodableError(kStage, "triple <" + path.subject.str() + ", " +
                                          label->str() + ", " + path.object.str() +
                                          "> is encoded twice");
    }
  }

  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (!used[v]) {
      throw NotDecodableError(kStage, "vertex '" + graph.id(v).str() +
                                          "' is not part of any label path");
    }
  }
  if (covered.size() != net.edge_count()) {
    throw NotDecodableError(kStage, std::to_string(net.edge_count() - covered.size()) +
                                        " edge(s) are not explained by any label path");
  }
  return out;
}

}  // namespace snc
