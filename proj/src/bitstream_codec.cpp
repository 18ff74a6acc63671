// SPDX-License-Identifier: Apache-2.0

#include "snc/bitstream_codec.hpp"

#include <algorithm>
#include <vector>

#include "snc/chain_codec.hpp"
#include "snc/dirund_codec.hpp"
#include "snc/errors.hpp"

namespace snc {

namespace {

constexpr const char* kStage = "bitstream";

}  // namespace

std::string serialize_canonical(const SemanticNetwork& net) {
  std::vector<std::string> lines;
  lines.reserve(net.size());
  for (const auto& [subject, label, object] : net.triples()) {
    lines.push_back(subject.str() + ' ' + label.str() + ' ' + object.str() + '\n');
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line;
  return out;
}

SemanticNetwork parse_canonical(std::string_view bytes) {
  const auto input = bytes;
  SemanticNetwork out;
  std::size_t line_no = 0;
  while (!bytes.empty()) {
    ++line_no;
    const auto eol = bytes.find('\n');
    if (eol == std::string_view::npos) throw ParseError(line_no, "missing final newline");
    const auto line = bytes.substr(0, eol);
    bytes.remove_prefix(eol + 1);

    const auto sp1 = line.find(' ');
    const auto sp2 = sp1 == std::string_view::npos ? sp1 : line.find(' ', sp1 + 1);
    if (sp2 == std::string_view::npos) throw ParseError(line_no, "expected three tokens");
    try {
      out.insert({VertexId(std::string(line.substr(0, sp1))),
                  LabelId(std::string(line.substr(sp1 + 1, sp2 - sp1 - 1))),
                  VertexId(std::string(line.substr(sp2 + 1)))});
    } catch (const InvalidTokenError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (serialize_canonical(out) != input) {
    throw ParseError(0, "bytes are not in canonical form");
  }
  return out;
}

BitString canonical_bits(const SemanticNetwork& net) {
  const auto text = serialize_canonical(net);
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  return BitString::from_bytes(bytes);
}

DirectedNetwork encode_network_as_chain(const SemanticNetwork& net, IdAllocator& fresh) {
  const auto bits = canonical_bits(net);
  if (bits.empty()) return {};
  return gamma(bits, fresh).network;
}

UndirectedNetwork encode_network_as_undirected_chain(const SemanticNetwork& net,
                                                     IdAllocator& fresh) {
  return hat_theta(encode_network_as_chain(net, fresh), fresh);
}

SemanticNetwork decode_network_from_chain(const DirectedNetwork& chain) {
  if (chain.empty()) return {};
  const auto bits = gamma_inv(chain);
  if (bits.size() % 8 != 0) {
    throw NotDecodableError(kStage, "chain length " + std::to_string(bits.size()) +
                                        " is not a multiple of 8");
  }
  const auto bytes = bits.to_bytes();
  const std::string text(bytes.begin(), bytes.end());
  try {
    return parse_canonical(text);
  } catch (const ParseError& e) {
    throw NotDecodableError(kStage, e.what());
  }
}

SemanticNetwork decode_network_from_chain(const UndirectedNetwork& chain) {
  return decode_network_from_chain(hat_theta_inv(chain));
}

}  // namespace snc
