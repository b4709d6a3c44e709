#pragma once

#include <cstdint>

#include "efpe/prf.hpp"

namespace efpe {

inline constexpr unsigned kMaxHalfDigits = 16;

/// 10^m by repeated multiplication. Throws InvalidArgument for m > 16.
std::uint64_t pow10(unsigned m);

/// Half-block modulus 10^m, 1 <= m <= 16.
class Modulus {
 public:
  explicit Modulus(unsigned digits);

  unsigned digits() const noexcept { return digits_; }
  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  unsigned digits_;
  std::uint64_t value_;
};

/*
* F(R, K, i): the wide PRF over R's two 32-bit limbs, reduced mod 10^m.
* The reduction is plain modulo, so outputs carry a bias below 10^m / 2^64.
*
* Throws DomainError if r >= 10^m, InvalidArgument if round_index > 255.
*/
std::uint64_t round_f(std::uint64_t r, SubkeyPair keys, unsigned round_index,
                      const Modulus& modulus);

}  // namespace efpe
