#include "efpe/rng.hpp"

#include <string>

#include "efpe/errors.hpp"

namespace efpe {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // 2^64 mod bound, computed without overflowing.
  const std::uint64_t excess = (0 - bound) % bound;
  const std::uint64_t limit = 0 - excess;  // wraps to 0 when excess == 0
  for (;;) {
    const std::uint64_t x = engine_();
    if (excess == 0 || x < limit) return x % bound;
  }
}

std::uint64_t parse_seed(std::string_view hex_text) {
  if (hex_text.empty() || hex_text.size() > 16) {
    throw InvalidArgument("seed must be 1 to 16 hex digits, got " +
                          std::to_string(hex_text.size()));
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < hex_text.size(); ++i) {
    const char c = hex_text[i];
    unsigned digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else throw InvalidArgument("seed: non-hex character at position " + std::to_string(i));
    value = (value << 4) | digit;
  }
  return value;
}

}  // namespace efpe
