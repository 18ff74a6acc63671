// SPDX-License-Identifier: Apache-2.0

#include "snc/token.hpp"

namespace snc {

bool is_valid_token(std::string_view text) noexcept {
  if (text.empty() || text.front() == '#' || text.front() == '%') return false;
  for (unsigned char c : text) {
    if (c < 0x21 || c > 0x7E) return false;
  }
  return true;
}

}  // namespace snc
