// SPDX-License-Identifier: Apache-2.0

#include "snc/label_codec.hpp"

#include <algorithm>
#include <bit>

#include "snc/errors.hpp"

namespace snc {

BitString::BitString(std::initializer_list<int> bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) throw CodebookError("bit values must be 0 or 1");
    push_back(b == 1);
  }
}

BitString BitString::parse(std::string_view text) {
  BitString out;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw CodebookError("'" + std::string(text) + "' is not a bitstring");
    }
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString out;
  out.bits_.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int shift = 7; shift >= 0; --shift) out.push_back(((byte >> shift) & 1U) != 0);
  }
  return out;
}

BitString BitString::from_integer(std::uint64_t value, std::size_t width) {
  BitString out;
  for (std::size_t i = width; i-- > 0;) {
    out.push_back(i < 64 && ((value >> i) & 1U) != 0);
  }
  return out;
}

std::size_t BitString::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b != 0 ? '1' : '0');
  return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  if (bits_.size() % 8 != 0) {
    throw CodeLengthError("bit length " + std::to_string(bits_.size()) +
                          " is not a multiple of 8");
  }
  std::vector<std::uint8_t> out(bits_.size() / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != 0) out[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
  }
  return out;
}

std::size_t codebook_width(std::size_t alphabet_size) {
  if (alphabet_size == 0) throw CodebookError("alphabet is empty");
  // ceil(log2(n)) == bit_width(n - 1) for n >= 1.
  const auto bits = static_cast<std::size_t>(std::bit_width(alphabet_size - 1));
  return std::max<std::size_t>(2, bits);
}

Codebook Codebook::build(const std::set<LabelId>& alphabet) {
  Codebook cb;
  cb.width_ = codebook_width(alphabet.size());
  std::uint64_t rank = 0;
  for (const auto& label : alphabet) {
    auto code = BitString::from_integer(rank++, cb.width_);
    cb.labels_.emplace(code, label);
    cb.codes_.emplace(label, std::move(code));
  }
  return cb;
}

Codebook Codebook::from_entries(std::size_t width,
                                std::vector<std::pair<LabelId, BitString>> entries) {
  // An empty assignment is allowed here so that the empty network has a
  // codebook to travel with; build() still rejects an empty alphabet.
  const std::size_t min_width = entries.empty() ? 2 : codebook_width(entries.size());
  if (width < min_width) {
    throw CodebookError("width " + std::to_string(width) + " is below the minimum " +
                        std::to_string(min_width) + " for " +
                        std::to_string(entries.size()) + " labels");
  }
  Codebook cb;
  cb.width_ = width;
  for (auto& [label, code] : entries) {
    if (code.size() != width) {
      throw CodeLengthError("code '" + code.to_string() + "' for label '" + label.str() +
                            "' does not have width " + std::to_string(width));
    }
    if (cb.codes_.contains(label)) {
      throw CodebookError("label '" + label.str() + "' appears twice");
    }
    if (!cb.labels_.emplace(code, label).second) {
      throw CodebookError("code '" + code.to_string() + "' is assigned twice");
    }
    cb.codes_.emplace(std::move(label), std::move(code));
  }
  return cb;
}

std::vector<LabelId> Codebook::alphabet() const {
  std::vector<LabelId> out;
  out.reserve(codes_.size());
  for (const auto& [label, code] : codes_) out.push_back(label);
  return out;
}

const BitString& Codebook::encode(const LabelId& label) const {
  auto it = codes_.find(label);
  if (it == codes_.end()) {
    throw UnknownLabelError("label '" + label.str() + "' is not in the codebook");
  }
  return it->second;
}

const LabelId& Codebook::decode(const BitString& bits) const {
  if (bits.size() != width_) {
    throw CodeLengthError("code '" + bits.to_string() + "' has length " +
                          std::to_string(bits.size()) + ", expected " +
                          std::to_string(width_));
  }
  auto it = labels_.find(bits);
  if (it == labels_.end()) {
    throw CodeNotInAlphabetError("code '" + bits.to_string() +
                                 "' is not assigned to any label");
  }
  return it->second;
}

}  // namespace snc
