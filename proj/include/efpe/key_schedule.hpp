#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "efpe/prf.hpp"

namespace efpe {

class SeededRng;

inline constexpr Word32 kScheduleConstant = 0xA5A5A5A5;
inline constexpr unsigned kDefaultRounds = 8;
inline constexpr unsigned kMinRounds = 2;
inline constexpr unsigned kMaxRounds = 255;

/// 128-bit master key as four big-endian words, words[0] most significant.
struct MasterKey {
  std::array<Word32, 4> words{};

  /// Returns a copy with bit `bit` (0 = least significant of the 128) inverted.
  MasterKey with_bit_flipped(unsigned bit) const;

  friend bool operator==(const MasterKey&, const MasterKey&) = default;
};

/// Ordered per-round subkey pairs. Immutable once derived.
class RoundKeySet {
 public:
  explicit RoundKeySet(std::vector<SubkeyPair> keys) : keys_(std::move(keys)) {}

  unsigned rounds() const noexcept { return static_cast<unsigned>(keys_.size()); }
  const SubkeyPair& operator[](std::size_t i) const { return keys_[i]; }
  const SubkeyPair& at(std::size_t i) const { return keys_.at(i); }
  std::span<const SubkeyPair> keys() const noexcept { return keys_; }

  friend bool operator==(const RoundKeySet&, const RoundKeySet&) = default;

 private:
  std::vector<SubkeyPair> keys_;
};

/// PRF input used for subkey `which` (0 or 1) of round `round`.
constexpr Word32 schedule_input(unsigned round, unsigned which) noexcept {
  return kScheduleConstant ^ ((static_cast<Word32>(round) << 8) | which);
}

/*
* Round i gets
*   k0 = prf_core(schedule_input(i, 0), (W0, W1))
*   k1 = prf_core(schedule_input(i, 1), (W2, W3))
* Throws InvalidArgument unless 2 <= rounds <= 255.
*/
RoundKeySet derive_round_keys(const MasterKey& master, unsigned rounds = kDefaultRounds);

/// Exactly 32 hex digits, case-insensitive, surrounding whitespace ignored.
/// Throws MalformedKey with the offending position.
MasterKey parse_master_key(std::string_view hex_text);

/// 32 lowercase hex digits, no newline.
std::string format_master_key(const MasterKey& key);

/// 128 bits from the operating system's secure random source.
/// Throws EntropyError if it cannot be opened.
MasterKey generate_master_key();

/// Deterministic test key: two 64-bit draws, high half first. NOT SECRET.
MasterKey generate_master_key(SeededRng& rng);
MasterKey generate_master_key_seeded(std::uint64_t seed);

}  // namespace efpe
