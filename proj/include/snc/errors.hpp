// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A token is empty or contains bytes outside printable, non-space ASCII.
class InvalidTokenError : public Error {
 public:
  using Error::Error;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

/// Mapping passed to relabel() is partial or not injective on the vertex set.
class RelabelError : public Error {
 public:
  using Error::Error;
};

class KindMismatchError : public Error {
 public:
  using Error::Error;
};

class CodebookError : public Error {
 public:
  using Error::Error;
};

class UnknownLabelError : public CodebookError {
 public:
  using CodebookError::CodebookError;
};

class CodeLengthError : public CodebookError {
 public:
  using CodebookError::CodebookError;
};

/// A bitstring of the right width that no label is assigned to.
class CodeNotInAlphabetError : public CodebookError {
 public:
  using CodebookError::CodebookError;
};

/// The input network is not in the image of the encoder being inverted.
/// `stage()` names the decoder that rejected it.
class NotDecodableError : public Error {
 public:
  NotDecodableError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

class NotChainShapedError : public NotDecodableError {
 public:
  explicit NotChainShapedError(const std::string& what)
      : NotDecodableError("chain", what) {}
};

/// Text document parse failure. `line()` is 1-based; 0 means "no line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace snc
