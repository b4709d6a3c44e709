#include "efpe/key_schedule.hpp"

#include <cctype>
#include <random>

#include "efpe/errors.hpp"
#include "efpe/rng.hpp"

namespace efpe {

MasterKey MasterKey::with_bit_flipped(unsigned bit) const {
  MasterKey out = *this;
  const unsigned word = 3 - (bit % 128) / 32;
  out.words[word] ^= Word32{1} << (bit % 32);
  return out;
}

RoundKeySet derive_round_keys(const MasterKey& master, unsigned rounds) {
  if (rounds < kMinRounds || rounds > kMaxRounds) {
    throw InvalidArgument("round count " + std::to_string(rounds) +
                          " outside [2, 255]");
  }
  const SubkeyPair first{master.words[0], master.words[1]};
  const SubkeyPair second{master.words[2], master.words[3]};
  std::vector<SubkeyPair> keys;
  keys.reserve(rounds);
  for (unsigned i = 0; i < rounds; ++i) {
    keys.push_back({prf_core(schedule_input(i, 0), first),
                    prf_core(schedule_input(i, 1), second)});
  }
  return RoundKeySet(std::move(keys));
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

MasterKey parse_master_key(std::string_view hex_text) {
  std::size_t begin = 0;
  std::size_t end = hex_text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(hex_text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(hex_text[end - 1]))) --end;
  const std::string_view body = hex_text.substr(begin, end - begin);

  if (body.size() != 32) {
    throw MalformedKey("key must be 32 hex characters, got " +
                           std::to_string(body.size()),
                       body.size());
  }
  MasterKey key;
  for (std::size_t i = 0; i < 32; ++i) {
    const int v = hex_value(body[i]);
    if (v < 0) {
      throw MalformedKey("non-hex character in key at position " + std::to_string(i), i);
    }
    key.words[i / 8] = (key.words[i / 8] << 4) | static_cast<Word32>(v);
  }
  return key;
}

std::string format_master_key(const MasterKey& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(32);
  for (Word32 w : key.words) {
    for (int shift = 28; shift >= 0; shift -= 4) out.push_back(kDigits[(w >> shift) & 0xF]);
  }
  return out;
}

MasterKey generate_master_key() {
  try {
    std::random_device device("/dev/urandom");
    MasterKey key;
    for (auto& w : key.words) w = static_cast<Word32>(device());
    return key;
  } catch (const std::exception& e) {
    throw EntropyError(std::string("secure random source unavailable: ") + e.what());
  }
}

MasterKey generate_master_key(SeededRng& rng) {
  const std::uint64_t hi = rng.next();
  const std::uint64_t lo = rng.next();
  return MasterKey{{static_cast<Word32>(hi >> 32), static_cast<Word32>(hi),
                    static_cast<Word32>(lo >> 32), static_cast<Word32>(lo)}};
}

MasterKey generate_master_key_seeded(std::uint64_t seed) {
  SeededRng rng(seed);
  return generate_master_key(rng);
}

}  // namespace efpe
