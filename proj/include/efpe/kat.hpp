#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "efpe/key_schedule.hpp"

namespace efpe::kat {

/*
* Known-answer file format, LF line endings:
*
*   # eFPE KAT v1
*   ROUNDS = 8
*
*   COUNT = 0
*   KEY = <32 lowercase hex>
*   PT = <digits>
*   CT = <digits>
*
*   COUNT = 1
*   ...
*/

struct KatRecord {
  std::size_t index = 0;
  MasterKey key;
  std::string plaintext;
  std::string ciphertext;

  friend bool operator==(const KatRecord&, const KatRecord&) = default;
};

struct KatFile {
  std::string algorithm = "eFPE";
  unsigned version = 1;
  unsigned rounds = kDefaultRounds;
  std::vector<KatRecord> records;

  friend bool operator==(const KatFile&, const KatFile&) = default;
};

/// Every even length 2..32.
std::vector<std::size_t> all_lengths();

/*
* Record i uses lengths[i % lengths.size()]. Per record the seeded generator
* yields the key (two 64-bit draws, high half first) then one draw per
* plaintext digit.
*/
KatFile generate_vectors(std::size_t count, std::span<const std::size_t> lengths,
                         std::uint64_t seed, unsigned rounds = kDefaultRounds);

std::string serialize(const KatFile& file);

/// Throws ParseError carrying the 1-based line number.
KatFile parse(std::string_view text);

KatFile read_file(const std::filesystem::path& path);

struct RecordResult {
  std::size_t index = 0;
  bool encrypt_ok = false;
  bool decrypt_ok = false;
  std::string expected;
  std::string actual;

  bool passed() const noexcept { return encrypt_ok && decrypt_ok; }
};

struct VerificationReport {
  std::vector<RecordResult> records;
  std::vector<std::string> warnings;

  std::vector<std::size_t> failing_indices() const;
  bool passed() const;
};

VerificationReport verify_vectors(const KatFile& file);

std::string render_text(const VerificationReport& report);

}  // namespace efpe::kat
