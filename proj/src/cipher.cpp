#include "efpe/cipher.hpp"

#include "efpe/errors.hpp"

namespace efpe {

namespace {

const char* numeric_violation(std::string_view text) noexcept {
  if (text.empty()) return "empty input";
  for (char c : text) {
    if (c < '0' || c > '9') return "non-digit character";
  }
  if (text.size() % 2 != 0) return "odd length";
  if (text.size() > kMaxBlockDigits) return "length exceeds 32 digits";
  return nullptr;
}

}  // namespace

void validate_numeric(std::string_view text) {
  if (const char* why = numeric_violation(text)) {
    throw FormatError(std::string(why) + " (length " + std::to_string(text.size()) + ")");
  }
}

bool is_valid_numeric(std::string_view text) noexcept {
  return numeric_violation(text) == nullptr;
}

BlockState split_halves(std::string_view text) {
  validate_numeric(text);
  BlockState state;
  state.m = static_cast<unsigned>(text.size() / 2);
  for (unsigned i = 0; i < state.m; ++i) {
    state.left = state.left * 10 + static_cast<unsigned>(text[i] - '0');
    state.right = state.right * 10 + static_cast<unsigned>(text[state.m + i] - '0');
  }
  return state;
}

std::string join_halves(const BlockState& state) {
  std::string out(2 * std::size_t{state.m}, '0');
  std::uint64_t l = state.left;
  std::uint64_t r = state.right;
  for (std::size_t i = state.m; i-- > 0;) {
    out[i] = static_cast<char>('0' + l % 10);
    out[state.m + i] = static_cast<char>('0' + r % 10);
    l /= 10;
    r /= 10;
  }
  return out;
}

Cipher::Cipher(const MasterKey& key, unsigned rounds)
    : round_keys_(derive_round_keys(key, rounds)) {}

Cipher::Cipher(RoundKeySet round_keys) : round_keys_(std::move(round_keys)) {}

namespace {

Modulus checked_modulus(const BlockState& state) {
  Modulus mod(state.m);
  if (state.left >= mod.value() || state.right >= mod.value()) {
    throw DomainError("block half not below 10^" + std::to_string(state.m));
  }
  return mod;
}

}  // namespace

BlockState Cipher::encrypt_state(BlockState state) const {
  const Modulus mod = checked_modulus(state);
  for (unsigned i = 0; i < round_keys_.rounds(); ++i) {
    const std::uint64_t f = round_f(state.right, round_keys_[i], i, mod);
    const std::uint64_t next_right = (state.left + f) % mod.value();
    state.left = state.right;
    state.right = next_right;
  }
  return state;
}

BlockState Cipher::decrypt_state(BlockState state) const {
  const Modulus mod = checked_modulus(state);
  for (unsigned i = round_keys_.rounds(); i-- > 0;) {
    const std::uint64_t prev_right = state.left;
    const std::uint64_t f = round_f(prev_right, round_keys_[i], i, mod);
    // Both operands are below 10^m, so adding the modulus keeps this nonnegative.
    const std::uint64_t prev_left = (state.right + mod.value() - f) % mod.value();
    state.left = prev_left;
    state.right = prev_right;
  }
  return state;
}

std::string Cipher::encrypt(std::string_view plaintext) const {
  return join_halves(encrypt_state(split_halves(plaintext)));
}

std::string Cipher::decrypt(std::string_view ciphertext) const {
  return join_halves(decrypt_state(split_halves(ciphertext)));
}

}  // namespace efpe
