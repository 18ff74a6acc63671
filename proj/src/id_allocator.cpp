// SPDX-License-Identifier: Apache-2.0

#include "snc/id_allocator.hpp"

#include <utility>

namespace snc {

IdAllocator::IdAllocator(std::uint64_t start, std::string prefix)
    : counter_(start), prefix_(std::move(prefix)) {
  // Throws early if the prefix itself is not a legal token start.
  VertexId probe(prefix_ + "0");
  (void)probe;
}

VertexId IdAllocator::next() {
  for (;;) {
    VertexId candidate(prefix_ + std::to_string(counter_++));
    if (!reserved_.contains(candidate)) return candidate;
  }
}

}  // namespace snc
