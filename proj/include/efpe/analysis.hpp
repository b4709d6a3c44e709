#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "efpe/key_schedule.hpp"

namespace efpe::analysis {

inline constexpr double kLog2Of10 = 3.32192809488736234787;

/// Acceptance thresholds for the statistical suites.
inline constexpr double kAvalancheThreshold = 0.99;
inline constexpr double kChiSquareCritical999Df9 = 27.88;
inline constexpr double kDistinctnessThreshold = 0.999;

/// Maps a digit string to a digit string of the same length.
using BlockFn = std::function<std::string(std::string_view)>;

struct SecurityEstimate {
  unsigned m = 0;
  double bits = 0.0;            // m * log2(10)
  std::uint64_t attack_ops = 0;  // 10^m
};

/// Effective security of an m-digit half-block. Throws InvalidArgument unless 1 <= m <= 16.
SecurityEstimate security_bits(unsigned m);

/*
* Birthday term q^2 / 2^k of the distinguishing bound, with k = m log2(10)
* so that 2^k = 10^m. The PRF advantage term has no concrete value and is
* not included; callers should report it as assumed.
*/
struct AdvantageBound {
  std::uint64_t q = 0;
  unsigned m = 0;
  double birthday_term = 0.0;
};

AdvantageBound birthday_bound_advantage(std::uint64_t q, unsigned m);

struct BijectivityReport {
  std::size_t n = 0;
  std::size_t domain_size = 0;
  std::size_t distinct_outputs = 0;
  std::size_t roundtrip_failures = 0;
  std::size_t format_failures = 0;
  bool passed = false;
};

/// Exhaustively encrypts all 10^n strings (n in {2, 4}); passes iff the outputs
/// are well-formed and pairwise distinct and every decryption restores its input.
BijectivityReport bijectivity_check(const MasterKey& key, std::size_t n,
                                    unsigned rounds = kDefaultRounds);
BijectivityReport bijectivity_check(const BlockFn& encrypt, const BlockFn& decrypt,
                                    std::size_t n);

struct AvalancheOptions {
  std::size_t trials = 1000;
  std::size_t n = 16;
  std::uint64_t seed = 0;
  /// Control mode: flip the chosen bit back before re-encrypting.
  bool restore_flip = false;
};

struct AvalancheReport {
  std::size_t trials = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trials_changed = 0;
  double mean_changed_digits = 0.0;
  double fraction_changed = 0.0;
  std::vector<std::size_t> changed_per_position;  // length n
  bool passed = false;  // fraction_changed >= kAvalancheThreshold

  friend bool operator==(const AvalancheReport&, const AvalancheReport&) = default;
};

/// Per trial: random key and plaintext, flip one random master-key bit, re-encrypt.
AvalancheReport avalanche_test(const AvalancheOptions& options);

struct DiffusionReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double mean_changed_bits = 0.0;
  unsigned min_changed_bits = 0;
  unsigned max_changed_bits = 0;
};

/// Single input-bit flips through prf_core with random inputs and subkeys.
DiffusionReport prf_diffusion_test(std::size_t samples, std::uint64_t seed);

struct DistributionReport {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::vector<double> chi_square;  // one per digit position, 9 degrees of freedom
  double critical_value = kChiSquareCritical999Df9;
  bool passed = false;

  friend bool operator==(const DistributionReport&, const DistributionReport&) = default;
};

/// Encrypts counters 0..samples-1 (as n-digit strings) and tests each output
/// digit position for uniformity. Throws InvalidArgument if samples < 1000.
DistributionReport digit_distribution_test(const MasterKey& key, std::size_t n,
                                           std::size_t samples);
DistributionReport digit_distribution_test(const BlockFn& encrypt, std::size_t n,
                                           std::size_t samples);

struct RoundKeyReport {
  std::size_t sample_keys = 0;
  unsigned rounds = 0;
  std::uint64_t seed = 0;
  std::size_t pairs_distinct = 0;  // schedules whose subkey pairs are pairwise distinct
  std::size_t words_distinct = 0;  // schedules whose 2*rounds words are pairwise distinct
  double pair_fraction = 0.0;
  double word_fraction = 0.0;
  bool schedule_inputs_distinct = false;
  bool passed = false;

  friend bool operator==(const RoundKeyReport&, const RoundKeyReport&) = default;
};

/// Exact check that every (round, which) schedule input differs, for round < rounds.
bool schedule_inputs_distinct(unsigned rounds);

RoundKeyReport round_key_distinctness(std::size_t sample_keys, std::uint64_t seed,
                                      unsigned rounds = kDefaultRounds);

std::string render_text(const SecurityEstimate& r);
std::string render_text(const AdvantageBound& r);
std::string render_text(const BijectivityReport& r);
std::string render_text(const AvalancheReport& r);
std::string render_text(const DiffusionReport& r);
std::string render_text(const DistributionReport& r);
std::string render_text(const RoundKeyReport& r);

/// One JSON document per report.
std::string render_json(const SecurityEstimate& r);
std::string render_json(const AdvantageBound& r);
std::string render_json(const BijectivityReport& r);
std::string render_json(const AvalancheReport& r);
std::string render_json(const DiffusionReport& r);
std::string render_json(const DistributionReport& r);
std::string render_json(const RoundKeyReport& r);

}  // namespace efpe::analysis
