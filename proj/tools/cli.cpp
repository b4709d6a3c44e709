#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efpe/analysis.hpp"
#include "efpe/cipher.hpp"
#include "efpe/errors.hpp"
#include "efpe/kat.hpp"
#include "efpe/rng.hpp"

namespace efpe::cli {

namespace {

constexpr const char* kDefaultSeed = "5eed";

/// Raised for bad flag values found after CLI11 has accepted the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t seed_or_usage(const std::string& hex) {
  try {
    return parse_seed(hex);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

bool write_text(const std::string& path, const std::string& text, std::ostream& out,
                std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

struct KeyArgs {
  std::string key_hex;
  std::string key_file;
  unsigned rounds = kDefaultRounds;
};

MasterKey load_key(const KeyArgs& args) {
  if (!args.key_file.empty()) {
    std::ifstream in(args.key_file);
    if (!in) throw UsageError("cannot read key file " + args.key_file);
    std::string line;
    std::getline(in, line);
    return parse_master_key(line);
  }
  return parse_master_key(args.key_hex);
}

std::string read_digits(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string line;
  std::getline(in, line);
  return trim(line);
}

int cmd_block(const KeyArgs& key_args, const std::string& digits_arg, bool decrypt,
              std::istream& in, std::ostream& out) {
  const Cipher cipher(load_key(key_args), key_args.rounds);
  const std::string digits = read_digits(digits_arg, in);
  out << (decrypt ? cipher.decrypt(digits) : cipher.encrypt(digits)) << "\n";
  return kExitOk;
}

int cmd_keygen(const std::string& out_path, const std::string& seed_hex, std::ostream& out,
               std::ostream& err) {
  MasterKey key;
  if (!seed_hex.empty()) {
    key = generate_master_key_seeded(seed_or_usage(seed_hex));
    err << "note: seeded key, deterministic and NOT secret; use only for test fixtures\n";
  } else {
    key = generate_master_key();
  }
  return write_text(out_path, format_master_key(key) + "\n", out, err) ? kExitOk : kExitFailure;
}

int cmd_vectors_generate(std::size_t count, const std::string& out_path,
                         const std::string& seed_hex, const std::vector<std::size_t>& lengths,
                         unsigned rounds, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = seed_or_usage(seed_hex);
  kat::KatFile file;
  try {
    file = kat::generate_vectors(count, lengths.empty() ? kat::all_lengths() : lengths, seed,
                                 rounds);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return write_text(out_path, kat::serialize(file), out, err) ? kExitOk : kExitFailure;
}

int cmd_vectors_verify(const std::string& path, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  kat::KatFile file;
  try {
    if (path == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      file = kat::parse(buf.str());
    } else {
      file = kat::read_file(path);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  const auto report = kat::verify_vectors(file);
  out << kat::render_text(report);
  return report.passed() ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  bool json = false;
  std::string seed = kDefaultSeed;
  std::size_t digits = 0;
  std::size_t keys = 0;
  std::size_t trials = 1000;
  std::size_t samples = 100000;
  unsigned rounds = kDefaultRounds;
  std::vector<unsigned> m_values;
  std::optional<std::uint64_t> queries;
};

template <typename Report>
void emit(const Report& report, bool json, std::ostream& out) {
  if (json) {
    out << analysis::render_json(report) << "\n";
  } else {
    out << analysis::render_text(report);
  }
}

int analyze_security(const AnalyzeArgs& a, std::ostream& out) {
  std::vector<unsigned> ms = a.m_values;
  if (ms.empty()) ms = {4, 8, 12, 16};
  for (unsigned m : ms) {
    try {
      emit(analysis::security_bits(m), a.json, out);
      if (a.queries) emit(analysis::birthday_bound_advantage(*a.queries, m), a.json, out);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
  return kExitOk;
}

int analyze_bijectivity(const AnalyzeArgs& a, std::ostream& out) {
  const std::size_t n = a.digits == 0 ? 2 : a.digits;
  if (n != 2 && n != 4) throw UsageError("--digits must be 2 or 4 for bijectivity");
  SeededRng rng(seed_or_usage(a.seed));
  const std::size_t keys = a.keys == 0 ? 100 : a.keys;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < keys; ++k) {
    const auto report = analysis::bijectivity_check(generate_master_key(rng), n, a.rounds);
    if (!report.passed) {
      ++failures;
      emit(report, a.json, out);
    }
  }
  if (a.json) {
    out << R"({"report":"bijectivity_summary","n":)" << n << R"(,"keys":)" << keys
        << R"(,"failures":)" << failures << R"(,"passed":)" << (failures == 0 ? "true" : "false")
        << "}\n";
  } else {
    out << "bijectivity n=" << n << " over " << keys << " keys: " << keys - failures
        << " permutations, " << failures << " failures: " << (failures == 0 ? "PASS" : "FAIL")
        << "\n";
  }
  return failures == 0 ? kExitOk : kExitFailure;
}

int analyze_avalanche(const AnalyzeArgs& a, std::ostream& out) {
  analysis::AvalancheOptions opts;
  opts.trials = a.trials;
  opts.n = a.digits == 0 ? 16 : a.digits;
  opts.seed = seed_or_usage(a.seed);
  analysis::AvalancheReport report;
  try {
    report = analysis::avalanche_test(opts);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  emit(report, a.json, out);
  emit(analysis::prf_diffusion_test(10000, opts.seed), a.json, out);
  return report.passed ? kExitOk : kExitFailure;
}

int analyze_distribution(const AnalyzeArgs& a, std::ostream& out) {
  const std::size_t n = a.digits == 0 ? 8 : a.digits;
  const std::size_t keys = a.keys == 0 ? 3 : a.keys;
  SeededRng rng(seed_or_usage(a.seed));
  bool all_passed = true;
  for (std::size_t k = 0; k < keys; ++k) {
    analysis::DistributionReport report;
    try {
      report = analysis::digit_distribution_test(generate_master_key(rng), n, a.samples);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    emit(report, a.json, out);
    all_passed = all_passed && report.passed;
  }
  return all_passed ? kExitOk : kExitFailure;
}

int analyze_roundkeys(const AnalyzeArgs& a, std::ostream& out) {
  analysis::RoundKeyReport report;
  try {
    report = analysis::round_key_distinctness(a.keys == 0 ? 10000 : a.keys,
                                              seed_or_usage(a.seed), a.rounds);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  emit(report, a.json, out);
  return report.passed ? kExitOk : kExitFailure;
}

int cmd_bench(std::size_t blocks, std::size_t digits, std::ostream& out) {
  if (blocks < 1) throw UsageError("--blocks must be >= 1");
  if (digits < kMinBlockDigits || digits > kMaxBlockDigits || digits % 2 != 0) {
    throw UsageError("--digits must be even and within [2, 32]");
  }
  SeededRng rng(1);
  const Cipher cipher(generate_master_key(rng));
  std::string block(digits, '0');
  for (auto& c : block) c = static_cast<char>('0' + rng.below(10));

  const auto start = std::chrono::steady_clock::now();
  std::size_t processed = 0;
  for (; processed < blocks; ++processed) block = cipher.encrypt(block);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

  const double seconds = elapsed.count();
  char line[160];
  std::snprintf(line, sizeof line,
                "blocks: %zu\ndigits: %zu\nseconds: %.6f\nblocks/s: %.0f\nns/block: %.1f\n",
                processed, digits, seconds, seconds > 0 ? processed / seconds : 0.0,
                seconds * 1e9 / static_cast<double>(processed));
  out << line << "last block: " << block << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"eFPE format-preserving encryption for even-length decimal strings", "efpe"};
  app.require_subcommand(1);

  std::string out_path;
  std::string seed_hex;
  auto* keygen = app.add_subcommand("keygen", "Write a new 128-bit key as 32 hex characters");
  keygen->add_option("--out", out_path, "Destination file (default: standard output)");
  keygen->add_option("--seed", seed_hex, "Deterministic test key from a 1-16 digit hex seed");

  KeyArgs key_args;
  std::string digits;
  auto add_block_command = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    auto* key = sub->add_option("--key", key_args.key_hex, "Key as 32 hex characters");
    auto* file = sub->add_option("--key-file", key_args.key_file, "File holding the hex key");
    key->excludes(file);
    sub->add_option("--rounds", key_args.rounds, "Feistel rounds")->check(CLI::Range(2, 255));
    sub->add_option("digits", digits, "Even-length digit string, or - for standard input")
        ->required();
    sub->callback([sub, key, file] {
      if (key->count() == 0 && file->count() == 0) {
        throw CLI::RequiredError(std::string(sub->get_name()) + ": --key or --key-file");
      }
    });
    return sub;
  };
  auto* encrypt = add_block_command("encrypt", "Encrypt one block");
  auto* decrypt = add_block_command("decrypt", "Decrypt one block");

  auto* vectors = app.add_subcommand("vectors", "Generate or verify known-answer files");
  vectors->require_subcommand(1);
  std::size_t count = 0;
  std::string vec_seed = kDefaultSeed;
  std::vector<std::size_t> lengths;
  unsigned vec_rounds = kDefaultRounds;
  auto* generate = vectors->add_subcommand("generate", "Write a seeded KAT file");
  generate->add_option("--count", count, "Number of records")->required()->check(CLI::PositiveNumber);
  generate->add_option("--out", out_path, "Destination file (default: standard output)");
  generate->add_option("--seed", vec_seed, "1-16 digit hex seed");
  generate->add_option("--lengths", lengths, "Block lengths to cycle through")->delimiter(',');
  generate->add_option("--rounds", vec_rounds, "Feistel rounds")->check(CLI::Range(2, 255));
  std::string verify_path;
  auto* verify = vectors->add_subcommand("verify", "Recompute every record of a KAT file");
  verify->add_option("file", verify_path, "KAT file, or - for standard input")->required();

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Run an analysis suite");
  analyze->require_subcommand(1);
  analyze->add_flag("--json", an.json, "Emit one JSON document per report");
  auto add_suite = [&](const char* name, const char* desc) {
    auto* s = analyze->add_subcommand(name, desc);
    s->add_flag("--json", an.json, "Emit one JSON document per report");
    return s;
  };
  auto* security = add_suite("security", "Effective security levels per half-block size");
  security->add_option("--m", an.m_values, "Half-block digit counts (default 4,8,12,16)")
      ->delimiter(',');
  security->add_option("--queries", an.queries, "Also print the birthday term for q queries");
  auto* bijectivity = add_suite("bijectivity", "Exhaustive permutation check for n = 2 or 4");
  bijectivity->add_option("--digits", an.digits, "Block length (2 or 4)");
  bijectivity->add_option("--keys", an.keys, "Random keys to test (default 100)");
  bijectivity->add_option("--seed", an.seed, "1-16 digit hex seed");
  bijectivity->add_option("--rounds", an.rounds)->check(CLI::Range(2, 255));
  auto* avalanche = add_suite("avalanche", "Single master-key bit flip sensitivity");
  avalanche->add_option("--trials", an.trials, "Trials (default 1000)");
  avalanche->add_option("--digits", an.digits, "Block length (default 16)");
  avalanche->add_option("--seed", an.seed, "1-16 digit hex seed");
  auto* distribution = add_suite("distribution", "Per-position digit chi-square");
  distribution->add_option("--digits", an.digits, "Block length (default 8)");
  distribution->add_option("--samples", an.samples, "Counter plaintexts (default 100000)");
  distribution->add_option("--keys", an.keys, "Random keys to test (default 3)");
  distribution->add_option("--seed", an.seed, "1-16 digit hex seed");
  auto* roundkeys = add_suite("roundkeys", "Round-key distinctness over random master keys");
  roundkeys->add_option("--keys", an.keys, "Master keys to sample (default 10000)");
  roundkeys->add_option("--seed", an.seed, "1-16 digit hex seed");
  roundkeys->add_option("--rounds", an.rounds, "Schedule length")->check(CLI::Range(1, 255));

  std::size_t bench_blocks = 1000000;
  std::size_t bench_digits = 16;
  auto* bench = app.add_subcommand("bench", "Single-thread encryption throughput");
  bench->add_option("--blocks", bench_blocks, "Blocks to encrypt (default 1000000)");
  bench->add_option("--digits", bench_digits, "Block length (default 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keygen->parsed()) return cmd_keygen(out_path, seed_hex, out, err);
    if (encrypt->parsed()) return cmd_block(key_args, digits, false, in, out);
    if (decrypt->parsed()) return cmd_block(key_args, digits, true, in, out);
    if (generate->parsed()) {
      return cmd_vectors_generate(count, out_path, vec_seed, lengths, vec_rounds, out, err);
    }
    if (verify->parsed()) return cmd_vectors_verify(verify_path, in, out, err);
    if (security->parsed()) return analyze_security(an, out);
    if (bijectivity->parsed()) return analyze_bijectivity(an, out);
    if (avalanche->parsed()) return analyze_avalanche(an, out);
    if (distribution->parsed()) return analyze_distribution(an, out);
    if (roundkeys->parsed()) return analyze_roundkeys(an, out);
    if (bench->parsed()) return cmd_bench(bench_blocks, bench_digits, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedKey& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EntropyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace efpe::cli
