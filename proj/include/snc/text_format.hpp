// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "snc/composite_codec.hpp"
#include "snc/label_codec.hpp"
#include "snc/network.hpp"

namespace snc {

/// `key=value` pairs that follow the `%kind` token on a header line.
using HeaderAttributes = std::map<std::string, std::string>;

/// A parsed network file of any kind.
struct NetworkDocument {
  AnyNetwork network;
  HeaderAttributes attributes;

  NetworkKind kind() const noexcept { return kind_of(network); }
};

// Readers. Blank lines and lines starting with `#` are skipped; the first
// remaining line must be the header. Failures throw ParseError carrying the
// 1-based line number.
//
//   %semnet            subject label object
//   %digraph, %ugraph  v <id> | e <a> <b>
//   %codebook width=L  <label> <bits>
SemanticNetwork parse_semnet(std::string_view text);
DirectedNetwork parse_digraph(std::string_view text);
UndirectedNetwork parse_ugraph(std::string_view text);
NetworkDocument parse_document(std::string_view text);
Codebook parse_codebook(std::string_view text);

// Writers emit sorted output; parse(write(n)) == n. Only isolated vertices
// get explicit `v` lines.
std::string write_semnet(const SemanticNetwork& net);
std::string write_digraph(const DirectedNetwork& net, const HeaderAttributes& attrs = {});
std::string write_ugraph(const UndirectedNetwork& net, const HeaderAttributes& attrs = {});
std::string write_document(const NetworkDocument& doc);
std::string write_codebook(const Codebook& codebook);

/// Graphviz rendering. Semantic networks become a digraph with edge labels.
std::string export_dot(const AnyNetwork& net);

/// Line-oriented `key=value` dump of a growth report and loop taxonomy.
std::string format_stats(const GrowthReport& report, const SelfLoopTaxonomy& loops);

}  // namespace snc
