// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// and exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "snc/bitstream_codec.hpp"
#include "snc/chain_codec.hpp"
#include "snc/composite_codec.hpp"
#include "snc/dirund_codec.hpp"
#include "snc/semdir_codec.hpp"
#include "support/figures.hpp"
#include "support/random_networks.hpp"

namespace {

using namespace snc;
using testing::Rng;
using testing::vid;

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> body;  // returns a short summary
};

// -- 1 ---------------------------------------------------------------------

std::string figure_goldens() {
  const auto cb = testing::eight_label_codebook();

  IdAllocator fa;
  const auto d = theta(testing::single_triple(), cb, fa);
  const auto d_named = relabel(d, {{vid("i"), vid("i")}, {vid("j"), vid("j")},
                                   {vid("_g0"), vid("b1")}, {vid("_g1"), vid("b2")},
                                   {vid("_g2"), vid("b3")}});
  require(d.vertex_count() == 5 && d.edge_count() == 8, "directed encoding is not 5/8");
  require(d_named == testing::directed_single_triple(), "directed edge set differs");

  IdAllocator fb;
  const auto u = hat_theta(DirectedNetwork{{vid("i"), vid("j")}}, fb);
  const auto u_named = relabel(u, {{vid("i"), vid("i")}, {vid("j"), vid("j")},
                                   {vid("_g0"), vid("x")}, {vid("_g1"), vid("y")},
                                   {vid("_g2"), vid("z")}});
  require(u.vertex_count() == 5 && u.edge_count() == 7, "direction gadget is not 5/7");
  require(u_named == testing::undirected_single_edge(), "direction gadget edge set differs");

  IdAllocator fc;
  const auto full = upsilon(testing::single_triple(), cb, fc);
  require(full.vertex_count() == 29 && full.edge_count() == 45, "full encoding is not 29/45");
  std::size_t markers = 0, tails = 0, arms = 0;
  for (const auto& v : full.vertices()) {
    if (full.has_edge(v, v)) {
      ++markers;
    } else if (degree(full, v) == 3) {
      ++tails;
    } else if (degree(full, v) == 2) {
      ++arms;
    }
  }
  require(markers == 5 && tails == 8 && arms == 16, "full encoding has the wrong shape");
  require(hat_theta_inv(full) == d, "full encoding does not sit over the directed one");
  require(upsilon_inv(full, cb) == testing::single_triple(), "full encoding does not decode");
  return "5/8, 5/7, 29/45 exact";
}

// -- 2 ---------------------------------------------------------------------

std::string component_round_trips() {
  std::size_t chains = 0;
  for (std::size_t len = 1; len <= 12; ++len) {
    for (std::uint64_t value = 0; value < (std::uint64_t{1} << len); ++value) {
      const auto bits = BitString::from_integer(value, len);
      IdAllocator fresh;
      require(gamma_inv(gamma(bits, fresh)) == bits, "chain round trip failed for " +
                                                         bits.to_string());
      ++chains;
    }
  }
  Rng rng(2001);
  for (int k = 0; k < 1000; ++k) {
    auto [s, cb] = testing::random_semantic(rng, 30, 16, 60);
    IdAllocator fresh;
    require(theta_inv(theta(s, cb, fresh), cb) == s, "semantic round trip failed");
  }
  for (int k = 0; k < 1000; ++k) {
    const auto d = testing::random_directed(rng, 40, 120);
    IdAllocator fresh;
    require(hat_theta_inv(hat_theta(d, fresh)) == d, "direction round trip failed");
  }
  return std::to_string(chains) + " chains, 1000 + 1000 random networks";
}

// -- 3 ---------------------------------------------------------------------

std::string composite_round_trips() {
  Rng rng(3001);
  std::size_t triples = 0;
  for (int k = 0; k < 1000; ++k) {
    auto [s, cb] = testing::random_semantic(rng, 30, 16, 60);
    IdAllocator fresh;
    require(upsilon_inv(upsilon(s, cb, fresh), cb) == s, "composite round trip failed");
    triples += s.size();
  }
  return "1000 networks, " + std::to_string(triples) + " triples";
}

// -- 4 ---------------------------------------------------------------------

std::string desk_scale_injectivity() {
  const auto cb = Codebook::build({LabelId("p"), LabelId("q")});
  std::vector<Triple> possible;
  for (const auto* a : {"i", "j"}) {
    for (const auto* l : {"p", "q"}) {
      for (const auto* b : {"i", "j"}) possible.push_back({vid(a), LabelId(l), vid(b)});
    }
  }
  std::set<UndirectedNetwork> images;
  for (unsigned mask = 0; mask < 256; ++mask) {
    SemanticNetwork s;
    for (unsigned k = 0; k < 8; ++k) {
      if ((mask >> k) & 1U) s.insert(possible[k]);
    }
    IdAllocator fresh;
    const auto u = upsilon(s, cb, fresh);
    require(upsilon_inv(u, cb) == s, "network " + std::to_string(mask) + " did not decode");
    images.insert(u);
  }
  require(images.size() == 256, "only " + std::to_string(images.size()) + " distinct images");
  return "256 distinct images, all decoded";
}

// -- 5 ---------------------------------------------------------------------

std::string topology_only_decoding() {
  Rng rng(5001);
  constexpr int kPerCodec = 200;
  for (int k = 0; k < kPerCodec; ++k) {
    const auto bits = testing::random_bits(rng, testing::uniform(rng, 1, 24));
    IdAllocator fresh;
    const auto chain = gamma(bits, fresh).network;
    const auto pi = testing::random_renaming(chain.vertices(), rng);
    require(gamma_inv(relabel(chain, pi)) == bits, "chain readback depends on names");
  }
  for (int k = 0; k < kPerCodec; ++k) {
    auto [s, cb] = testing::random_semantic(rng, 20, 16, 40);
    IdAllocator fresh;
    const auto d = theta(s, cb, fresh);
    const auto pi = testing::random_renaming(d.vertices(), rng);
    require(theta_inv(relabel(d, pi), cb) == relabel(s, pi), "semantic decode depends on names");
  }
  for (int k = 0; k < kPerCodec; ++k) {
    const auto d = testing::random_directed(rng, 30, 80);
    IdAllocator fresh;
    const auto u = hat_theta(d, fresh);
    const auto pi = testing::random_renaming(u.vertices(), rng);
    require(hat_theta_inv(relabel(u, pi)) == relabel(d, pi), "direction decode depends on names");
  }
  for (int k = 0; k < kPerCodec; ++k) {
    auto [s, cb] = testing::random_semantic(rng, 20, 16, 40);
    IdAllocator fresh;
    const auto u = upsilon(s, cb, fresh);
    const auto pi = testing::random_renaming(u.vertices(), rng);
    require(upsilon_inv(relabel(u, pi), cb) == relabel(s, pi), "composite decode depends on names");
  }
  // Whole-network chains carry the vertex names in their bits, so the
  // renaming applies to the chain's own gadget vertices only.
  for (int k = 0; k < kPerCodec; ++k) {
    const auto s = testing::random_semantic(rng, 8, 4, 8).network;
    IdAllocator fresh;
    const auto c = encode_network_as_chain(s, fresh);
    require(decode_network_from_chain(relabel(c, testing::random_renaming(c.vertices(), rng))) == s,
            "bitstream decode depends on names");
    const auto u = encode_network_as_undirected_chain(s, fresh);
    require(decode_network_from_chain(relabel(u, testing::random_renaming(u.vertices(), rng))) == s,
            "undirected bitstream decode depends on names");
  }
  return std::to_string(kPerCodec) + " renamed instances x 6 codecs";
}

// -- 6 ---------------------------------------------------------------------

std::string growth_formulas() {
  Rng rng(6001);
  for (int k = 0; k < 500; ++k) {
    auto [s, cb] = testing::random_semantic(rng, 30, 16, 60);
    const auto r = growth_report(s, cb);
    require(r.matches_exact(), "measured counts differ from the exact formulas");
    require(r.within_bounds(), "measured counts exceed the upper bounds");

    // Direction stage on its own: |V| + 3|D| vertices, |V| + 5|D| edges.
    IdAllocator fresh;
    const auto d = theta(s, cb, fresh);
    const auto u = hat_theta(d, fresh);
    require(u.vertex_count() == d.vertex_count() + 3 * d.edge_count() &&
                u.edge_count() == d.vertex_count() + 5 * d.edge_count(),
            "direction stage count law violated");
  }
  // All-ones codes saturate every bound.
  for (std::size_t width = 2; width <= 6; ++width) {
    const auto cb = Codebook::build(testing::label_pool(std::size_t{1} << width));
    const auto all_ones = cb.decode(BitString::from_integer((1U << width) - 1, width));
    for (int k = 0; k < 20; ++k) {
      const auto vertices = testing::vertex_pool(testing::uniform(rng, 1, 20));
      SemanticNetwork s;
      const auto n = testing::uniform(rng, 1, 40);
      for (std::size_t t = 0; t < n; ++t) {
        s.insert({vertices[testing::uniform(rng, 0, vertices.size() - 1)], all_ones,
                  vertices[testing::uniform(rng, 0, vertices.size() - 1)]});
      }
      const auto r = growth_report(s, cb);
      require(r.directed == r.directed_upper && r.undirected == r.undirected_upper,
              "all-ones instance does not meet the bound");
    }
  }
  return "500 random exact and bounded; 100 all-ones at the bound";
}

// -- 7 ---------------------------------------------------------------------

UndirectedNetwork without_edge(const UndirectedNetwork& u, const UndirectedEdge& victim) {
  UndirectedNetwork out;
  for (const auto& v : u.vertices()) out.add_vertex(v);
  for (const auto& e : u.edges()) {
    if (!(e == victim)) out.add_edge(e.first(), e.second());
  }
  return out;
}

std::string rejection() {
  Rng rng(7001);
  int removed = 0, added = 0, spliced = 0;
  for (int k = 0; k < 100; ++k) {
    SemanticNetwork s;
    Codebook cb = Codebook::build({LabelId("p")});
    do {
      auto c = testing::random_semantic(rng, 10, 8, 12);
      s = std::move(c.network);
      cb = std::move(c.codebook);
    } while (s.empty());
    IdAllocator fresh;
    const auto u = upsilon(s, cb, fresh);
    const std::vector<VertexId> vs(u.vertices().begin(), u.vertices().end());
    const std::vector<UndirectedEdge> es(u.edges().begin(), u.edges().end());

    UndirectedNetwork mutated;
    switch (k % 3) {
      case 0:
        mutated = without_edge(u, es[testing::uniform(rng, 0, es.size() - 1)]);
        ++removed;
        break;
      case 1: {
        mutated = u;
        for (;;) {
          const auto& a = vs[testing::uniform(rng, 0, vs.size() - 1)];
          const auto& b = vs[testing::uniform(rng, 0, vs.size() - 1)];
          if (mutated.add_edge(a, b)) break;
        }
        ++added;
        break;
      }
      default: {
        const auto victim = es[testing::uniform(rng, 0, es.size() - 1)];
        mutated = without_edge(u, victim);
        const VertexId w("splice");
        mutated.add_edge(victim.first(), w);
        mutated.add_edge(w, victim.second());
        ++spliced;
        break;
      }
    }
    bool rejected = false;
    try {
      (void)upsilon_inv(mutated, cb);
    } catch (const NotDecodableError&) {
      rejected = true;
    }
    require(rejected, "mutation " + std::to_string(k) + " decoded without error");
  }
  return std::to_string(removed) + " removals, " + std::to_string(added) + " additions, " +
         std::to_string(spliced) + " splices rejected";
}

// -- 8 ---------------------------------------------------------------------

std::string bitstream_variants() {
  Rng rng(8001);
  std::size_t bytes = 0;
  for (int k = 0; k < 100; ++k) {
    const auto s = testing::random_semantic(rng, 20, 10, 20).network;
    const auto size = serialize_canonical(s).size();
    IdAllocator fresh;
    const auto chain = encode_network_as_chain(s, fresh);
    require(chain.vertex_count() == 8 * size, "chain length is not 8 x byte count");
    require(decode_network_from_chain(chain) == s, "directed chain round trip failed");
    const auto u = encode_network_as_undirected_chain(s, fresh);
    require(decode_network_from_chain(u) == s, "undirected chain round trip failed");
    bytes += size;
  }
  return "100 networks, " + std::to_string(bytes) + " serialized bytes";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "figure goldens", 1.0, figure_goldens},
      {"AC2", "component round trips", 30.0, component_round_trips},
      {"AC3", "composite round trips", 60.0, composite_round_trips},
      {"AC4", "desk-scale injectivity", 10.0, desk_scale_injectivity},
      {"AC5", "topology-only decoding", 30.0, topology_only_decoding},
      {"AC6", "growth formulas", 10.0, growth_formulas},
      {"AC7", "rejection of mutated encodings", 30.0, rejection},
      {"AC8", "whole-network chain encodings", 30.0, bitstream_variants},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds >= c.limit_seconds) {
      ok = false;
      detail += " (too slow)";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", seconds, c.limit_seconds);
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.title << " [" << timing
              << "]: " << detail << '\n';
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
