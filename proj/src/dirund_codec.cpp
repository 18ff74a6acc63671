// SPDX-License-Identifier: Apache-2.0

#include "snc/dirund_codec.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "graph_index.hpp"
#include "snc/errors.hpp"

namespace snc {

namespace {

constexpr const char* kStage = "direction";

bool is_gadget_member(const detail::UgraphIndex& g, std::size_t v, std::size_t degree) {
  return !g.has_loop(v) && g.degree(v) == degree;
}

}  // namespace

UndirectedNetwork hat_theta(const DirectedNetwork& net, IdAllocator& fresh) {
  fresh.reserve_all(net.vertices());
  UndirectedNetwork out;
  for (const auto& v : net.vertices()) out.add_edge(v, v);
  for (const auto& [tail, head] : net.edges()) {
    const auto x = fresh.next();
    const auto y = fresh.next();
    const auto z = fresh.next();
    out.add_edge(tail, x);
    out.add_edge(x, y);
    out.add_edge(x, z);
    out.add_edge(y, head);
    out.add_edge(z, head);
  }
  return out;
}

bool q_plus(const UndirectedNetwork& net, const VertexId& tail, const VertexId& head) {
  const detail::UgraphIndex g(net);
  if (!g.contains(tail) || !g.contains(head)) return false;
  const auto i = g.index(tail);
  const auto j = g.index(head);
  for (auto x : g.neighbors(i)) {
    if (x == j || !is_gadget_member(g, x, 3)) continue;
    // Degree 3 without a loop: x's neighbors are i and exactly two others.
    std::vector<std::size_t> rest;
    for (auto n : g.neighbors(x)) {
      if (n != i) rest.push_back(n);
    }
    if (rest.size() != 2) continue;
    const bool ok = std::all_of(rest.begin(), rest.end(), [&](auto w) {
      return w != i && w != j && is_gadget_member(g, w, 2) && g.has_edge(w, j);
    });
    if (ok) return true;
  }
  return false;
}

DirectedNetwork hat_theta_inv(const UndirectedNetwork& net) {
  const detail::UgraphIndex g(net);
  DirectedNetwork out;
  std::size_t loops = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.has_loop(v)) {
      out.add_vertex(g.id(v));
      ++loops;
    }
  }

  std::vector<bool> claimed(g.size(), false);
  std::set<std::pair<std::size_t, std::size_t>> covered;
  auto cover = [&](std::size_t a, std::size_t b) {
    if (!covered.emplace(std::min(a, b), std::max(a, b)).second) {
      throw NotDecodableError(kStage, "edge {" + g.id(a).str() + ", " + g.id(b).str() +
                                          "} belongs to more than one gadget");
    }
  };
  auto claim = [&](std::size_t v) {
    if (claimed[v]) {
      throw NotDecodableError(kStage,
                              "vertex '" + g.id(v).str() + "' is shared between gadgets");
    }
    claimed[v] = true;
  };
  auto malformed = [&](std::size_t x, const std::string& why) {
    return NotDecodableError(kStage, "malformed gadget at '" + g.id(x).str() + "': " + why);
  };

  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g.has_loop(x)) continue;
    const auto deg = g.degree(x);
    if (deg == 2) continue;  // y/z candidate, claimed by its x below
    if (deg != 3) {
      throw NotDecodableError(kStage, "unmarked vertex '" + g.id(x).str() +
                                          "' has degree " + std::to_string(deg));
    }
    std::optional<std::size_t> tail;
    std::vector<std::size_t> arms;
    for (auto n : g.neighbors(x)) {
      if (g.has_loop(n)) {
        if (tail) throw malformed(x, "two marked neighbors");
        tail = n;
      } else {
        arms.push_back(n);
      }
    }
    if (!tail || arms.size() != 2) throw malformed(x, "no marked tail");

    std::optional<std::size_t> head;
    for (auto arm : arms) {
      if (g.degree(arm) != 2) throw malformed(x, "arm vertex does not have degree 2");
      const auto& ends = g.neighbors(arm);
      const auto far = ends[0] == x ? ends[1] : ends[0];
      if (!g.has_loop(far)) throw malformed(x, "arm does not end at a marked vertex");
      if (head && *head != far) throw malformed(x, "arms end at different vertices");
      head = far;
    }

    claim(x);
    claim(arms[0]);
    claim(arms[1]);
    cover(*tail, x);
    cover(x, arms[0]);
    cover(x, arms[1]);
    cover(arms[0], *head);
    cover(arms[1], *head);
    if (!out.add_edge(g.id(*tail), g.id(*head))) {
      throw NotDecodableError(kStage, "directed edge (" + g.id(*tail).str() + ", " +
                                          g.id(*head).str() + ") is encoded twice");
    }
  }

  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!g.has_loop(v) && !claimed[v]) {
      throw NotDecodableError(kStage,
                              "vertex '" + g.id(v).str() + "' is not part of any gadget");
    }
  }
  if (covered.size() + loops != net.edge_count()) {
    throw NotDecodableError(kStage,
                            std::to_string(net.edge_count() - loops - covered.size()) +
                                " edge(s) are not explained by any gadget");
  }
  return out;
}

}  // namespace snc
