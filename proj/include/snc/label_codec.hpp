// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snc/token.hpp"

namespace snc {

/// Ordered sequence of bits. Bit 0 is the first (leftmost) bit.
class BitString {
 public:
  BitString() = default;
  BitString(std::initializer_list<int> bits);

  /// Parses a string of '0'/'1' characters. Throws CodebookError otherwise.
  static BitString parse(std::string_view text);
  /// Unpacks bytes most-significant bit first.
  static BitString from_bytes(std::span<const std::uint8_t> bytes);
  /// `width` low-order bits of `value`, most-significant bit first.
  static BitString from_integer(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  std::size_t popcount() const noexcept;

  std::string to_string() const;
  /// Packs MSB-first. Requires size() to be a multiple of 8.
  std::vector<std::uint8_t> to_bytes() const;

  friend auto operator<=>(const BitString&, const BitString&) = default;
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// max(2, ceil(log2(alphabet_size))). Throws CodebookError for 0.
std::size_t codebook_width(std::size_t alphabet_size);

/// Bijection between an edge-label alphabet and fixed-width bitstrings.
///
/// build() assigns codes by lexicographic rank of the label token, counting
/// up in binary from all-zeros, so the same alphabet always yields the same
/// codebook.
class Codebook {
 public:
  static Codebook build(const std::set<LabelId>& alphabet);

  /// Accepts an explicit assignment (e.g. read from a file). Codes must all
  /// have length `width`, be pairwise distinct, and `width` must be at least
  /// codebook_width(entries.size()) (2 for an empty list).
  static Codebook from_entries(std::size_t width,
                               std::vector<std::pair<LabelId, BitString>> entries);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool contains(const LabelId& label) const { return codes_.contains(label); }

  /// Labels in lexicographic order.
  std::vector<LabelId> alphabet() const;

  const BitString& encode(const LabelId& label) const;
  const LabelId& decode(const BitString& bits) const;

  friend bool operator==(const Codebook&, const Codebook&) = default;

 private:
  Codebook() = default;

  std::size_t width_ = 0;
  std::map<LabelId, BitString> codes_;
  std::map<BitString, LabelId> labels_;
};

}  // namespace snc
