// SPDX-License-Identifier: Apache-2.0

#include "snc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "snc/bitstream_codec.hpp"
#include "snc/composite_codec.hpp"
#include "snc/errors.hpp"
#include "snc/semdir_codec.hpp"
#include "snc/dirund_codec.hpp"
#include "snc/text_format.hpp"

namespace snc {

namespace {

constexpr const char* kBitOrder = "msb-first";

class IoError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
}

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("SNC_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  std::uint64_t value = 0;
  const std::string_view s(raw);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("SNC_SEED must be a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

Codebook codebook_for(const SemanticNetwork& net) {
  const auto labels = net.labels();
  if (labels.empty()) return Codebook::from_entries(2, {});
  return Codebook::build(labels);
}

void check_bit_order(const HeaderAttributes& attrs) {
  const auto it = attrs.find("bitorder");
  if (it != attrs.end() && it->second != kBitOrder) {
    throw NotDecodableError("bitstream", "unsupported bit order '" + it->second + "'");
  }
}

struct Options {
  std::string from = "semnet";
  std::string to;
  std::string codebook;
  std::string output;
  std::string input;
};

bool needs_codebook(const std::string& form) { return form == "digraph" || form == "ugraph"; }

/// Encodes `net` into the named target form, ready to be written out.
NetworkDocument encode(const SemanticNetwork& net, const std::string& target,
                       const Codebook& codebook, IdAllocator& fresh) {
  if (target == "digraph") {
    return {theta(net, codebook, fresh),
            {{"encoding", "theta"}, {"width", std::to_string(codebook.width())}}};
  }
  if (target == "ugraph") {
    return {upsilon(net, codebook, fresh),
            {{"encoding", "upsilon"}, {"width", std::to_string(codebook.width())}}};
  }
  if (target == "chain") {
    return {encode_network_as_chain(net, fresh),
            {{"encoding", "chain"}, {"bitorder", kBitOrder}}};
  }
  return {encode_network_as_undirected_chain(net, fresh),
          {{"encoding", "chain"}, {"bitorder", kBitOrder}}};
}

SemanticNetwork decode(const std::string& text, const std::string& source,
                       const std::optional<Codebook>& codebook) {
  if (source == "digraph") return theta_inv(parse_digraph(text), *codebook);
  if (source == "ugraph") return upsilon_inv(parse_ugraph(text), *codebook);
  const auto doc = parse_document(text);
  check_bit_order(doc.attributes);
  if (source == "chain") {
    if (doc.kind() != NetworkKind::directed) throw ParseError(0, "expected a %digraph chain");
    return decode_network_from_chain(std::get<DirectedNetwork>(doc.network));
  }
  if (doc.kind() != NetworkKind::undirected) throw ParseError(0, "expected a %ugraph chain");
  return decode_network_from_chain(std::get<UndirectedNetwork>(doc.network));
}

int run_encode(const Options& o, std::ostream& out, std::ostream& err) {
  const auto net = parse_semnet(read_file(o.input));
  const bool explicit_codebook = !o.codebook.empty();
  const auto codebook =
      explicit_codebook ? parse_codebook(read_file(o.codebook)) : codebook_for(net);
  IdAllocator fresh(seed_from_env());
  write_output(o.output, write_document(encode(net, o.to, codebook, fresh)), out);
  if (needs_codebook(o.to) && !explicit_codebook) {
    if (o.output.empty() || o.output == "-") {
      err << "note: codebook not saved; regenerate it with 'snc codebook " << o.input
          << "'\n";
    } else {
      write_output(o.output + ".codebook", write_codebook(codebook), out);
    }
  }
  return kExitOk;
}

int run_decode(const Options& o, std::ostream& out) {
  std::optional<Codebook> codebook;
  if (needs_codebook(o.from)) {
    if (o.codebook.empty()) throw UsageError("--codebook is required to decode " + o.from);
    codebook = parse_codebook(read_file(o.codebook));
  }
  write_output(o.output, write_semnet(decode(read_file(o.input), o.from, codebook)), out);
  return kExitOk;
}

int run_roundtrip(const Options& o, std::ostream& out) {
  const auto net = parse_semnet(read_file(o.input));
  const auto codebook =
      o.codebook.empty() ? codebook_for(net) : parse_codebook(read_file(o.codebook));
  IdAllocator fresh(seed_from_env());
  const auto encoded = write_document(encode(net, o.to, codebook, fresh));
  const auto decoded = decode(encoded, o.to, codebook);
  if (decoded != net) {
    out << "MISMATCH via " << o.to << ": " << net.size() << " triple(s) in, "
        << decoded.size() << " out\n";
    return kExitNotDecodable;
  }
  out << "OK via " << o.to << ": " << net.size() << " triple(s), "
      << std::count(encoded.begin(), encoded.end(), '\n') << " encoded line(s)\n";
  return kExitOk;
}

int run_stats(const Options& o, std::ostream& out) {
  const auto net = parse_semnet(read_file(o.input));
  const auto codebook =
      o.codebook.empty() ? codebook_for(net) : parse_codebook(read_file(o.codebook));
  IdAllocator fresh(seed_from_env());
  const auto report = growth_report(net, codebook);
  const auto loops = self_loop_taxonomy(upsilon(net, codebook, fresh), codebook);
  write_output(o.output, format_stats(report, loops), out);
  return kExitOk;
}

int run_dot(const Options& o, std::ostream& out) {
  write_output(o.output, export_dot(parse_document(read_file(o.input)).network), out);
  return kExitOk;
}

int run_codebook(const Options& o, std::ostream& out) {
  const auto net = parse_semnet(read_file(o.input));
  write_output(o.output, write_codebook(Codebook::build(net.labels())), out);
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lossless codecs between semantic, directed and undirected networks", "snc"};
  app.require_subcommand(1);

  Options o;
  const std::vector<std::string> encoded_forms{"digraph", "ugraph", "chain", "chain-ugraph"};

  auto* encode_cmd = app.add_subcommand("encode", "Encode a %semnet file");
  encode_cmd->add_option("--from", o.from, "Input kind")
      ->check(CLI::IsMember({"semnet"}));
  encode_cmd->add_option("--to", o.to, "Target encoding")
      ->required()
      ->check(CLI::IsMember(encoded_forms));
  encode_cmd->add_option("--codebook", o.codebook, "Codebook file (derived if omitted)");
  encode_cmd->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
  encode_cmd->add_option("input", o.input, "Input file")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Decode an encoded network to %semnet");
  decode_cmd->add_option("--from", o.from, "Encoding of the input")
      ->required()
      ->check(CLI::IsMember(encoded_forms));
  decode_cmd->add_option("--codebook", o.codebook, "Codebook file (digraph/ugraph)");
  decode_cmd->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
  decode_cmd->add_option("input", o.input, "Input file")->required();

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Encode, decode and compare");
  roundtrip_cmd->add_option("--via", o.to, "Encoding to go through")
      ->required()
      ->check(CLI::IsMember(encoded_forms));
  roundtrip_cmd->add_option("--codebook", o.codebook, "Codebook file (derived if omitted)");
  roundtrip_cmd->add_option("input", o.input, "Input %semnet file")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Report encoding sizes and self-loop counts");
  stats_cmd->add_option("--codebook", o.codebook, "Codebook file (derived if omitted)");
  stats_cmd->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
  stats_cmd->add_option("input", o.input, "Input %semnet file")->required();

  auto* dot_cmd = app.add_subcommand("dot", "Render any network file as Graphviz DOT");
  dot_cmd->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
  dot_cmd->add_option("input", o.input, "Input file")->required();

  auto* codebook_cmd = app.add_subcommand("codebook", "Derive the codebook of a %semnet file");
  codebook_cmd->add_option("-o,--output", o.output, "Output file (stdout if omitted)");
  codebook_cmd->add_option("input", o.input, "Input %semnet file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (encode_cmd->parsed()) return run_encode(o, out, err);
    if (decode_cmd->parsed()) return run_decode(o, out);
    if (roundtrip_cmd->parsed()) return run_roundtrip(o, out);
    if (stats_cmd->parsed()) return run_stats(o, out);
    if (dot_cmd->parsed()) return run_dot(o, out);
    if (codebook_cmd->parsed()) return run_codebook(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidTokenError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const NotDecodableError& e) {
    err << "not decodable (" << e.stage() << "): " << e.what() << '\n';
    return kExitNotDecodable;
  } catch (const CodebookError& e) {
    err << "codebook error: " << e.what() << '\n';
    return kExitCodebook;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace snc
