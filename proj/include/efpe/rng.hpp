#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace efpe {

/*
* Seeded, platform-independent generator for reproducible fixtures and
* statistical runs. Wraps std::mt19937_64 and only consumes raw engine
* output (std distributions differ between standard libraries).
*
* Not a source of secret keys.
*/
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint32_t next32() { return static_cast<std::uint32_t>(engine_() >> 32); }

  /// Uniform value in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Parses 1..16 hex digits into a seed. Throws InvalidArgument otherwise.
std::uint64_t parse_seed(std::string_view hex_text);

}  // namespace efpe
