#include "efpe/round_function.hpp"

#include <string>

#include "efpe/errors.hpp"

namespace efpe {

std::uint64_t pow10(unsigned m) {
  if (m > kMaxHalfDigits) {
    throw InvalidArgument("pow10: exponent " + std::to_string(m) + " exceeds 16");
  }
  std::uint64_t v = 1;
  for (unsigned i = 0; i < m; ++i) v *= 10;
  return v;
}

Modulus::Modulus(unsigned digits) : digits_(digits), value_(0) {
  if (digits < 1 || digits > kMaxHalfDigits) {
    throw InvalidArgument("half-block digit count " + std::to_string(digits) +
                          " outside [1, 16]");
  }
  value_ = pow10(digits);
}

std::uint64_t round_f(std::uint64_t r, SubkeyPair keys, unsigned round_index,
                      const Modulus& modulus) {
  if (r >= modulus.value()) {
    throw DomainError("round_f: half-block " + std::to_string(r) + " not below 10^" +
                      std::to_string(modulus.digits()));
  }
  const auto lo = static_cast<Word32>(r);
  const auto hi = static_cast<Word32>(r >> 32);
  return prf_wide(lo, hi, round_index, keys) % modulus.value();
}

}  // namespace efpe
