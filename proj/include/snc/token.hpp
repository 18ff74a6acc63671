// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "snc/errors.hpp"

namespace snc {

/// True iff `text` is usable as a vertex or label token: non-empty, every
/// byte in 0x21..0x7E, and not starting with the comment/header sigils
/// `#` or `%`.
bool is_valid_token(std::string_view text) noexcept;

/// An opaque, validated, whitespace-free text token. `Tag` keeps vertex and
/// label tokens apart at compile time.
template <typename Tag>
class Token {
 public:
  explicit Token(std::string text) : text_(std::move(text)) {
    if (!is_valid_token(text_)) {
      throw InvalidTokenError("invalid token '" + text_ + "'");
    }
  }
  explicit Token(const char* text) : Token(std::string(text)) {}

  const std::string& str() const noexcept { return text_; }

  friend auto operator<=>(const Token&, const Token&) = default;
  friend bool operator==(const Token&, const Token&) = default;

 private:
  std::string text_;
};

struct VertexTag {};
struct LabelTag {};

using VertexId = Token<VertexTag>;
using LabelId = Token<LabelTag>;

}  // namespace snc

template <typename Tag>
struct std::hash<snc::Token<Tag>> {
  std::size_t operator()(const snc::Token<Tag>& t) const noexcept {
    return std::hash<std::string>{}(t.str());
  }
};
