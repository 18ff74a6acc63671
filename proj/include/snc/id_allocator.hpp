// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "snc/token.hpp"

namespace snc {

/// Hands out fresh vertex IDs `<prefix><counter>` for gadget vertices.
/// IDs that collide with a reserved token are skipped. Decoders never look
/// at these tokens; the scheme only exists to make encoder output stable.
class IdAllocator {
 public:
  explicit IdAllocator(std::uint64_t start = 0, std::string prefix = "_g");

  void reserve(const VertexId& v) { reserved_.insert(v); }

  template <typename Range>
  void reserve_all(const Range& ids) {
    for (const auto& v : ids) reserve(v);
  }

  VertexId next();

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t counter_;
  std::string prefix_;
  std::set<VertexId> reserved_;
};

}  // namespace snc
