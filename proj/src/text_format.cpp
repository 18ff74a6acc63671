// SPDX-License-Identifier: Apache-2.0

#include "snc/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "snc/errors.hpp"

namespace snc {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    auto end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Splits `text` into non-blank, non-comment lines.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    const auto line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

struct Header {
  std::string kind;
  HeaderAttributes attributes;
};

Header parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "missing header line");
  const auto& first = lines.front();
  const auto sigil = first.tokens.front();
  if (sigil.size() < 2 || sigil.front() != '%') {
    throw ParseError(first.number, "expected a '%<kind>' header");
  }
  Header h{std::string(sigil.substr(1)), {}};
  for (std::size_t k = 1; k < first.tokens.size(); ++k) {
    const auto tok = first.tokens[k];
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(first.number, "malformed header attribute '" + std::string(tok) + "'");
    }
    h.attributes[std::string(tok.substr(0, eq))] = std::string(tok.substr(eq + 1));
  }
  return h;
}

void expect_kind(const Header& h, std::string_view kind, std::size_t line) {
  if (h.kind != kind) {
    throw ParseError(line, "expected '%" + std::string(kind) + "' header, got '%" + h.kind +
                               "'");
  }
}

template <typename Id>
Id make_token(std::string_view text, std::size_t line) {
  try {
    return Id(std::string(text));
  } catch (const InvalidTokenError& e) {
    throw ParseError(line, e.what());
  }
}

SemanticNetwork semnet_body(const std::vector<Line>& lines) {
  SemanticNetwork out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, tokens] = lines[k];
    if (tokens.size() != 3) {
      throw ParseError(number, "expected 'subject label object', got " +
                                   std::to_string(tokens.size()) + " token(s)");
    }
    out.insert({make_token<VertexId>(tokens[0], number),
                make_token<LabelId>(tokens[1], number),
                make_token<VertexId>(tokens[2], number)});
  }
  return out;
}

template <typename Network>
Network graph_body(const std::vector<Line>& lines) {
  Network out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, tokens] = lines[k];
    const auto record = tokens.front();
    if (record == "v" && tokens.size() == 2) {
      out.add_vertex(make_token<VertexId>(tokens[1], number));
    } else if (record == "e" && tokens.size() == 3) {
      out.add_edge(make_token<VertexId>(tokens[1], number),
                   make_token<VertexId>(tokens[2], number));
    } else if (record == "v" || record == "e") {
      throw ParseError(number, "wrong number of tokens for a '" + std::string(record) +
                                   "' record");
    } else {
      throw ParseError(number, "unknown record type '" + std::string(record) + "'");
    }
  }
  return out;
}

std::string header_line(std::string_view kind, const HeaderAttributes& attrs) {
  std::string out = "%" + std::string(kind);
  for (const auto& [key, value] : attrs) out += " " + key + "=" + value;
  out += '\n';
  return out;
}

template <typename Network>
std::set<VertexId> isolated_vertices(const Network& net) {
  std::set<VertexId> out = net.vertices();
  for (const auto& e : net.edges()) {
    if constexpr (std::is_same_v<Network, DirectedNetwork>) {
      out.erase(e.first);
      out.erase(e.second);
    } else {
      out.erase(e.first());
      out.erase(e.second());
    }
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

SemanticNetwork parse_semnet(std::string_view text) {
  const auto lines = content_lines(text);
  const auto header = parse_header(lines);
  expect_kind(header, "semnet", lines.front().number);
  return semnet_body(lines);
}

DirectedNetwork parse_digraph(std::string_view text) {
  const auto lines = content_lines(text);
  const auto header = parse_header(lines);
  expect_kind(header, "digraph", lines.front().number);
  return graph_body<DirectedNetwork>(lines);
}

UndirectedNetwork parse_ugraph(std::string_view text) {
  const auto lines = content_lines(text);
  const auto header = parse_header(lines);
  expect_kind(header, "ugraph", lines.front().number);
  return graph_body<UndirectedNetwork>(lines);
}

NetworkDocument parse_document(std::string_view text) {
  const auto lines = content_lines(text);
  auto header = parse_header(lines);
  NetworkDocument doc{SemanticNetwork{}, std::move(header.attributes)};
  if (header.kind == "semnet") {
    doc.network = semnet_body(lines);
  } else if (header.kind == "digraph") {
    doc.network = graph_body<DirectedNetwork>(lines);
  } else if (header.kind == "ugraph") {
    doc.network = graph_body<UndirectedNetwork>(lines);
  } else {
    throw ParseError(lines.front().number, "unknown document kind '%" + header.kind + "'");
  }
  return doc;
}

Codebook parse_codebook(std::string_view text) {
  const auto lines = content_lines(text);
  const auto header = parse_header(lines);
  expect_kind(header, "codebook", lines.front().number);
  const auto width_attr = header.attributes.find("width");
  if (width_attr == header.attributes.end()) {
    throw ParseError(lines.front().number, "codebook header lacks width=<L>");
  }
  std::size_t width = 0;
  const auto& w = width_attr->second;
  const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), width);
  if (ec != std::errc{} || ptr != w.data() + w.size()) {
    throw ParseError(lines.front().number, "width '" + w + "' is not a number");
  }

  std::vector<std::pair<LabelId, BitString>> entries;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, tokens] = lines[k];
    if (tokens.size() != 2) throw ParseError(number, "expected '<label> <bits>'");
    try {
      entries.emplace_back(make_token<LabelId>(tokens[0], number),
                           BitString::parse(tokens[1]));
    } catch (const CodebookError& e) {
      throw ParseError(number, e.what());
    }
  }
  // Structural problems (duplicates, widths) surface as CodebookError.
  return Codebook::from_entries(width, std::move(entries));
}

std::string write_semnet(const SemanticNetwork& net) {
  std::string out = "%semnet\n";
  for (const auto& [subject, label, object] : net.triples()) {
    out += subject.str() + ' ' + label.str() + ' ' + object.str() + '\n';
  }
  return out;
}

std::string write_digraph(const DirectedNetwork& net, const HeaderAttributes& attrs) {
  std::string out = header_line("digraph", attrs);
  for (const auto& v : isolated_vertices(net)) out += "v " + v.str() + '\n';
  for (const auto& [from, to] : net.edges()) out += "e " + from.str() + ' ' + to.str() + '\n';
  return out;
}

std::string write_ugraph(const UndirectedNetwork& net, const HeaderAttributes& attrs) {
  std::string out = header_line("ugraph", attrs);
  for (const auto& v : isolated_vertices(net)) out += "v " + v.str() + '\n';
  for (const auto& e : net.edges()) {
    out += "e " + e.first().str() + ' ' + e.second().str() + '\n';
  }
  return out;
}

std::string write_document(const NetworkDocument& doc) {
  struct Writer {
    const HeaderAttributes& attrs;
    std::string operator()(const SemanticNetwork& n) const { return write_semnet(n); }
    std::string operator()(const DirectedNetwork& n) const { return write_digraph(n, attrs); }
    std::string operator()(const UndirectedNetwork& n) const { return write_ugraph(n, attrs); }
  };
  return std::visit(Writer{doc.attributes}, doc.network);
}

std::string write_codebook(const Codebook& codebook) {
  std::string out = "%codebook width=" + std::to_string(codebook.width()) + '\n';
  for (const auto& label : codebook.alphabet()) {
    out += label.str() + ' ' + codebook.encode(label).to_string() + '\n';
  }
  return out;
}

std::string export_dot(const AnyNetwork& net) {
  std::ostringstream os;
  if (const auto* s = std::get_if<SemanticNetwork>(&net)) {
    os << "digraph semnet {\n";
    for (const auto& [subject, label, object] : s->triples()) {
      os << "  " << dot_quote(subject.str()) << " -> " << dot_quote(object.str())
         << " [label=" << dot_quote(label.str()) << "];\n";
    }
  } else if (const auto* d = std::get_if<DirectedNetwork>(&net)) {
    os << "digraph digraph {\n";
    for (const auto& v : d->vertices()) os << "  " << dot_quote(v.str()) << ";\n";
    for (const auto& [from, to] : d->edges()) {
      os << "  " << dot_quote(from.str()) << " -> " << dot_quote(to.str()) << ";\n";
    }
  } else {
    const auto& u = std::get<UndirectedNetwork>(net);
    os << "graph ugraph {\n";
    for (const auto& v : u.vertices()) os << "  " << dot_quote(v.str()) << ";\n";
    for (const auto& e : u.edges()) {
      os << "  " << dot_quote(e.first().str()) << " -- " << dot_quote(e.second().str())
         << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string format_stats(const GrowthReport& r, const SelfLoopTaxonomy& loops) {
  std::ostringstream os;
  os << "semantic.vertices=" << r.semantic_vertices << '\n'
     << "semantic.triples=" << r.triples << '\n'
     << "semantic.labels=" << r.alphabet_size << '\n'
     << "codebook.width=" << r.width << '\n';
  auto counts = [&](std::string_view prefix, const Counts& c) {
    os << prefix << ".vertices=" << c.vertices << '\n'
       << prefix << ".edges=" << c.edges << '\n';
  };
  counts("directed", r.directed);
  counts("directed.exact", r.directed_exact);
  counts("directed.upper", r.directed_upper);
  counts("undirected", r.undirected);
  counts("undirected.exact", r.undirected_exact);
  counts("undirected.upper", r.undirected_upper);
  os << "selfloops.undirected=" << loops.undirected << '\n'
     << "selfloops.directed=" << loops.directed << '\n'
     << "selfloops.semantic=" << loops.semantic << '\n'
     << "check.exact=" << (r.matches_exact() ? "ok" : "FAIL") << '\n'
     << "check.bounds=" << (r.within_bounds() ? "ok" : "FAIL") << '\n';
  return os.str();
}

}  // namespace snc
