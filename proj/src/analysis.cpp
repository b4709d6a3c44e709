#include "efpe/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "efpe/cipher.hpp"
#include "efpe/errors.hpp"
#include "efpe/rng.hpp"

namespace efpe::analysis {

using nlohmann::json;

SecurityEstimate security_bits(unsigned m) {
  if (m < 1 || m > kMaxHalfDigits) {
    throw InvalidArgument("security_bits: m = " + std::to_string(m) + " outside [1, 16]");
  }
  return {m, m * kLog2Of10, pow10(m)};
}

AdvantageBound birthday_bound_advantage(std::uint64_t q, unsigned m) {
  if (m < 1 || m > kMaxHalfDigits) {
    throw InvalidArgument("birthday_bound_advantage: m = " + std::to_string(m) +
                          " outside [1, 16]");
  }
  const double qd = static_cast<double>(q);
  return {q, m, qd * qd / static_cast<double>(pow10(m))};
}

namespace {

std::string counter_string(std::uint64_t value, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t i = n; i-- > 0 && value != 0;) {
    out[i] = static_cast<char>('0' + value % 10);
    value /= 10;
  }
  return out;
}

std::string random_digits(SeededRng& rng, std::size_t n) {
  std::string out(n, '0');
  for (auto& c : out) c = static_cast<char>('0' + rng.below(10));
  return out;
}

bool same_shape(std::string_view in, std::string_view out) {
  return out.size() == in.size() && is_valid_numeric(out);
}

void require_even_length(std::size_t n) {
  if (n < kMinBlockDigits || n > kMaxBlockDigits || n % 2 != 0) {
    throw InvalidArgument("block length " + std::to_string(n) +
                          " must be even and within [2, 32]");
  }
}

}  // namespace

BijectivityReport bijectivity_check(const MasterKey& key, std::size_t n, unsigned rounds) {
  const Cipher cipher(key, rounds);
  return bijectivity_check([&](std::string_view p) { return cipher.encrypt(p); },
                           [&](std::string_view c) { return cipher.decrypt(c); }, n);
}

BijectivityReport bijectivity_check(const BlockFn& encrypt, const BlockFn& decrypt,
                                    std::size_t n) {
  if (n != 2 && n != 4) {
    throw InvalidArgument("bijectivity_check: n must be 2 or 4, got " + std::to_string(n));
  }
  BijectivityReport report;
  report.n = n;
  report.domain_size = static_cast<std::size_t>(pow10(static_cast<unsigned>(n)));

  std::vector<bool> seen(report.domain_size, false);
  for (std::size_t v = 0; v < report.domain_size; ++v) {
    const std::string pt = counter_string(v, n);
    const std::string ct = encrypt(pt);
    if (!same_shape(pt, ct)) {
      ++report.format_failures;
      continue;
    }
    const auto index = static_cast<std::size_t>(std::stoull(ct));
    if (!seen[index]) {
      seen[index] = true;
      ++report.distinct_outputs;
    }
    if (decrypt(ct) != pt) ++report.roundtrip_failures;
  }
  report.passed = report.format_failures == 0 && report.roundtrip_failures == 0 &&
                  report.distinct_outputs == report.domain_size;
  return report;
}

AvalancheReport avalanche_test(const AvalancheOptions& options) {
  if (options.trials < 1) throw InvalidArgument("avalanche_test: trials must be >= 1");
  require_even_length(options.n);

  AvalancheReport report;
  report.trials = options.trials;
  report.n = options.n;
  report.seed = options.seed;
  report.changed_per_position.assign(options.n, 0);

  SeededRng rng(options.seed);
  std::size_t total_changed = 0;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const MasterKey key = generate_master_key(rng);
    const std::string pt = random_digits(rng, options.n);
    const auto bit = static_cast<unsigned>(rng.below(128));

    MasterKey other = key.with_bit_flipped(bit);
    if (options.restore_flip) other = other.with_bit_flipped(bit);

    const std::string a = Cipher(key).encrypt(pt);
    const std::string b = Cipher(other).encrypt(pt);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < options.n; ++i) {
      if (a[i] != b[i]) {
        ++changed;
        ++report.changed_per_position[i];
      }
    }
    total_changed += changed;
    if (changed != 0) ++report.trials_changed;
  }
  report.mean_changed_digits = static_cast<double>(total_changed) / options.trials;
  report.fraction_changed = static_cast<double>(report.trials_changed) / options.trials;
  report.passed = report.fraction_changed >= kAvalancheThreshold;
  return report;
}

DiffusionReport prf_diffusion_test(std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("prf_diffusion_test: samples must be >= 1");
  DiffusionReport report;
  report.samples = samples;
  report.seed = seed;
  report.min_changed_bits = 32;

  SeededRng rng(seed);
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Word32 input = rng.next32();
    const SubkeyPair keys{rng.next32(), rng.next32()};
    const auto bit = static_cast<unsigned>(rng.below(32));
    const Word32 diff = prf_core(input, keys) ^ prf_core(input ^ (Word32{1} << bit), keys);
    const auto changed = static_cast<unsigned>(std::popcount(diff));
    total += changed;
    report.min_changed_bits = std::min(report.min_changed_bits, changed);
    report.max_changed_bits = std::max(report.max_changed_bits, changed);
  }
  report.mean_changed_bits = static_cast<double>(total) / samples;
  return report;
}

DistributionReport digit_distribution_test(const MasterKey& key, std::size_t n,
                                           std::size_t samples) {
  const Cipher cipher(key);
  return digit_distribution_test([&](std::string_view p) { return cipher.encrypt(p); }, n,
                                 samples);
}

DistributionReport digit_distribution_test(const BlockFn& encrypt, std::size_t n,
                                           std::size_t samples) {
  if (samples < 1000) {
    throw InvalidArgument("digit_distribution_test: samples must be >= 1000");
  }
  require_even_length(n);

  std::vector<std::array<std::size_t, 10>> counts(n, std::array<std::size_t, 10>{});
  for (std::size_t i = 0; i < samples; ++i) {
    const std::string pt = counter_string(i, n);
    const std::string ct = encrypt(pt);
    if (!same_shape(pt, ct)) {
      throw FormatError("digit_distribution_test: cipher produced malformed output '" + ct + "'");
    }
    for (std::size_t pos = 0; pos < n; ++pos) ++counts[pos][ct[pos] - '0'];
  }

  DistributionReport report;
  report.n = n;
  report.samples = samples;
  report.passed = true;
  const double expected = static_cast<double>(samples) / 10.0;
  for (const auto& tally : counts) {
    double chi = 0.0;
    for (std::size_t c : tally) {
      const double d = static_cast<double>(c) - expected;
      chi += d * d / expected;
    }
    report.chi_square.push_back(chi);
    if (!(chi < report.critical_value)) report.passed = false;
  }
  return report;
}

bool schedule_inputs_distinct(unsigned rounds) {
  std::vector<Word32> inputs;
  for (unsigned i = 0; i < rounds; ++i) {
    inputs.push_back(schedule_input(i, 0));
    inputs.push_back(schedule_input(i, 1));
  }
  std::sort(inputs.begin(), inputs.end());
  return std::adjacent_find(inputs.begin(), inputs.end()) == inputs.end();
}

RoundKeyReport round_key_distinctness(std::size_t sample_keys, std::uint64_t seed,
                                      unsigned rounds) {
  if (sample_keys < 1) throw InvalidArgument("round_key_distinctness: sample_keys must be >= 1");
  if (rounds < 1 || rounds > kMaxRounds) {
    throw InvalidArgument("round_key_distinctness: rounds " + std::to_string(rounds) +
                          " outside [1, 255]");
  }
  RoundKeyReport report;
  report.sample_keys = sample_keys;
  report.rounds = rounds;
  report.seed = seed;
  report.schedule_inputs_distinct = schedule_inputs_distinct(rounds);

  // A one-round schedule is the prefix of the two-round one.
  const unsigned derive_rounds = std::max(rounds, kMinRounds);
  SeededRng rng(seed);
  for (std::size_t s = 0; s < sample_keys; ++s) {
    const RoundKeySet schedule = derive_round_keys(generate_master_key(rng), derive_rounds);
    const auto keys = schedule.keys().first(rounds);

    bool pairs_ok = true;
    for (std::size_t a = 0; a < keys.size() && pairs_ok; ++a) {
      for (std::size_t b = a + 1; b < keys.size(); ++b) {
        if (keys[a] == keys[b]) {
          pairs_ok = false;
          break;
        }
      }
    }
    std::vector<Word32> words;
    for (const auto& k : keys) {
      words.push_back(k.k0);
      words.push_back(k.k1);
    }
    std::sort(words.begin(), words.end());
    const bool words_ok = std::adjacent_find(words.begin(), words.end()) == words.end();

    report.pairs_distinct += pairs_ok;
    report.words_distinct += words_ok;
  }
  report.pair_fraction = static_cast<double>(report.pairs_distinct) / sample_keys;
  report.word_fraction = static_cast<double>(report.words_distinct) / sample_keys;
  report.passed = report.schedule_inputs_distinct &&
                  report.pair_fraction >= kDistinctnessThreshold;
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

const char* verdict(bool passed) { return passed ? "PASS" : "FAIL"; }

}  // namespace

std::string render_text(const SecurityEstimate& r) {
  return "m = " + std::to_string(r.m) + " digits: " + fixed(r.bits, 1) + " bits, ~10^" +
         std::to_string(r.m) + " ops (" + std::to_string(r.attack_ops) + ")\n";
}

std::string render_text(const AdvantageBound& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", r.birthday_term);
  return "q = " + std::to_string(r.q) + ", m = " + std::to_string(r.m) +
         ": birthday term q^2/10^m = " + buf + " (+ PRF advantage, assumed)\n";
}

std::string render_text(const BijectivityReport& r) {
  std::ostringstream os;
  os << "bijectivity n=" << r.n << ": " << r.distinct_outputs << "/" << r.domain_size
     << " distinct outputs, " << r.roundtrip_failures << " roundtrip failures, "
     << r.format_failures << " format failures: " << verdict(r.passed) << "\n";
  return os.str();
}

std::string render_text(const AvalancheReport& r) {
  std::ostringstream os;
  os << "key avalanche n=" << r.n << " trials=" << r.trials << " seed=" << r.seed << "\n"
     << "  fraction changed: " << fixed(r.fraction_changed, 4) << " (threshold "
     << fixed(kAvalancheThreshold, 2) << ")\n"
     << "  mean changed digits: " << fixed(r.mean_changed_digits, 3) << "\n"
     << "  changed per position:";
  for (auto c : r.changed_per_position) os << ' ' << c;
  os << "\n  " << verdict(r.passed) << "\n";
  return os.str();
}

std::string render_text(const DiffusionReport& r) {
  std::ostringstream os;
  os << "prf_core single-bit diffusion samples=" << r.samples << " seed=" << r.seed
     << ": mean " << fixed(r.mean_changed_bits, 3) << " bits (min " << r.min_changed_bits
     << ", max " << r.max_changed_bits << ")\n";
  return os.str();
}

std::string render_text(const DistributionReport& r) {
  std::ostringstream os;
  os << "digit distribution n=" << r.n << " samples=" << r.samples << " critical "
     << fixed(r.critical_value, 2) << "\n  chi-square:";
  for (double c : r.chi_square) os << ' ' << fixed(c, 2);
  os << "\n  " << verdict(r.passed) << "\n";
  return os.str();
}

std::string render_text(const RoundKeyReport& r) {
  std::ostringstream os;
  os << "round-key distinctness keys=" << r.sample_keys << " rounds=" << r.rounds
     << " seed=" << r.seed << "\n"
     << "  schedule inputs distinct: " << (r.schedule_inputs_distinct ? "yes" : "no") << "\n"
     << "  pairs distinct: " << r.pairs_distinct << " (" << fixed(r.pair_fraction, 5) << ")\n"
     << "  words distinct: " << r.words_distinct << " (" << fixed(r.word_fraction, 5) << ")\n"
     << "  " << verdict(r.passed) << "\n";
  return os.str();
}

std::string render_json(const SecurityEstimate& r) {
  return json{{"report", "security"}, {"m", r.m}, {"bits", r.bits}, {"attack_ops", r.attack_ops}}
      .dump();
}

std::string render_json(const AdvantageBound& r) {
  return json{{"report", "birthday_bound"},
              {"q", r.q},
              {"m", r.m},
              {"birthday_term", r.birthday_term},
              {"prf_advantage", "assumed"}}
      .dump();
}

std::string render_json(const BijectivityReport& r) {
  return json{{"report", "bijectivity"},
              {"n", r.n},
              {"domain_size", r.domain_size},
              {"distinct_outputs", r.distinct_outputs},
              {"roundtrip_failures", r.roundtrip_failures},
              {"format_failures", r.format_failures},
              {"passed", r.passed}}
      .dump();
}

std::string render_json(const AvalancheReport& r) {
  return json{{"report", "avalanche"},
              {"trials", r.trials},
              {"n", r.n},
              {"seed", r.seed},
              {"trials_changed", r.trials_changed},
              {"fraction_changed", r.fraction_changed},
              {"mean_changed_digits", r.mean_changed_digits},
              {"changed_per_position", r.changed_per_position},
              {"threshold", kAvalancheThreshold},
              {"passed", r.passed}}
      .dump();
}

std::string render_json(const DiffusionReport& r) {
  return json{{"report", "prf_diffusion"},
              {"samples", r.samples},
              {"seed", r.seed},
              {"mean_changed_bits", r.mean_changed_bits},
              {"min_changed_bits", r.min_changed_bits},
              {"max_changed_bits", r.max_changed_bits}}
      .dump();
}

std::string render_json(const DistributionReport& r) {
  return json{{"report", "distribution"},
              {"n", r.n},
              {"samples", r.samples},
              {"chi_square", r.chi_square},
              {"critical_value", r.critical_value},
              {"passed", r.passed}}
      .dump();
}

std::string render_json(const RoundKeyReport& r) {
  return json{{"report", "roundkeys"},
              {"sample_keys", r.sample_keys},
              {"rounds", r.rounds},
              {"seed", r.seed},
              {"schedule_inputs_distinct", r.schedule_inputs_distinct},
              {"pairs_distinct", r.pairs_distinct},
              {"words_distinct", r.words_distinct},
              {"pair_fraction", r.pair_fraction},
              {"word_fraction", r.word_fraction},
              {"passed", r.passed}}
      .dump();
}

}  // namespace efpe::analysis
