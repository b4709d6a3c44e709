#pragma once

#include <array>
#include <cstdint>

namespace efpe {

using Word32 = std::uint32_t;

/// Subkeys for the two PRF iterations; k0 is XORed in the first, k1 in the second.
struct SubkeyPair {
  Word32 k0 = 0;
  Word32 k1 = 0;

  friend constexpr bool operator==(const SubkeyPair&, const SubkeyPair&) = default;
};

/// The AES forward S-box.
extern const std::array<std::uint8_t, 256> kSbox;

/// Applies the S-box to each byte of the word independently.
Word32 sub_bytes(Word32 state) noexcept;

/// Bytes (b0,b1,b2,b3) -> (b1,b2,b3,b0), b0 being the most significant.
constexpr Word32 rotate_left_one_byte(Word32 state) noexcept {
  return (state << 8) | (state >> 24);
}

/// Two iterations of SubBytes, AddRoundKey, Rotate over a 32-bit state.
Word32 prf_core(Word32 input, SubkeyPair keys) noexcept;

/*
* Wide-output extension for half-blocks above 32 bits. Three chained core
* calls; the round index enters as a byte-broadcast XOR mask and the
* constants 1 and 2 separate the chain links. Returns (s3 << 32) | s2.
*
* Throws InvalidArgument if round_index > 255.
*/
std::uint64_t prf_wide(Word32 limb_lo, Word32 limb_hi, unsigned round_index,
                       SubkeyPair keys);

}  // namespace efpe
