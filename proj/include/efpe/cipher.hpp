#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "efpe/key_schedule.hpp"
#include "efpe/round_function.hpp"

namespace efpe {

inline constexpr std::size_t kMinBlockDigits = 2;
inline constexpr std::size_t kMaxBlockDigits = 32;

/// Both halves of a 2m-digit block as integers below 10^m.
struct BlockState {
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  unsigned m = 0;

  friend bool operator==(const BlockState&, const BlockState&) = default;
};

/// Throws FormatError naming the violation (empty, odd length, too long,
/// non-digit) unless `text` is an even-length digit string of 2..32 chars.
void validate_numeric(std::string_view text);

/// Non-throwing form of validate_numeric.
bool is_valid_numeric(std::string_view text) noexcept;

BlockState split_halves(std::string_view text);

/// Renders both halves zero-padded to m digits.
std::string join_halves(const BlockState& state);

/*
* eFPE block cipher context: a balanced Feistel network over decimal
* strings. Each round computes F = round_f(R, K_i, i) and sets
* (L, R) <- (R, (L + F) mod 10^m); decryption runs the rounds backwards
* with modular subtraction.
*
* Immutable after construction; safe to share across threads.
*/
class Cipher {
 public:
  explicit Cipher(const MasterKey& key, unsigned rounds = kDefaultRounds);
  explicit Cipher(RoundKeySet round_keys);

  std::string encrypt(std::string_view plaintext) const;
  std::string decrypt(std::string_view ciphertext) const;

  BlockState encrypt_state(BlockState state) const;
  BlockState decrypt_state(BlockState state) const;

  unsigned rounds() const noexcept { return round_keys_.rounds(); }
  const RoundKeySet& round_keys() const noexcept { return round_keys_; }

 private:
  RoundKeySet round_keys_;
};

}  // namespace efpe
