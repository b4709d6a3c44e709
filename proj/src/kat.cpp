#include "efpe/kat.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "efpe/cipher.hpp"
#include "efpe/errors.hpp"
#include "efpe/rng.hpp"

namespace efpe::kat {

std::vector<std::size_t> all_lengths() {
  std::vector<std::size_t> out;
  for (std::size_t n = kMinBlockDigits; n <= kMaxBlockDigits; n += 2) out.push_back(n);
  return out;
}

KatFile generate_vectors(std::size_t count, std::span<const std::size_t> lengths,
                         std::uint64_t seed, unsigned rounds) {
  if (count < 1) throw InvalidArgument("generate_vectors: count must be >= 1");
  if (lengths.empty()) throw InvalidArgument("generate_vectors: empty length set");
  for (std::size_t n : lengths) {
    if (n < kMinBlockDigits || n > kMaxBlockDigits || n % 2 != 0) {
      throw FormatError("generate_vectors: invalid block length " + std::to_string(n));
    }
  }

  KatFile file;
  file.rounds = rounds;
  SeededRng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    KatRecord rec;
    rec.index = i;
    rec.key = generate_master_key(rng);
    rec.plaintext.resize(lengths[i % lengths.size()]);
    for (auto& c : rec.plaintext) c = static_cast<char>('0' + rng.below(10));
    rec.ciphertext = Cipher(rec.key, rounds).encrypt(rec.plaintext);
    file.records.push_back(std::move(rec));
  }
  return file;
}

std::string serialize(const KatFile& file) {
  std::string out = "# " + file.algorithm + " KAT v" + std::to_string(file.version) + "\n";
  out += "ROUNDS = " + std::to_string(file.rounds) + "\n";
  for (const auto& r : file.records) {
    out += "\nCOUNT = " + std::to_string(r.index) + "\n";
    out += "KEY = " + format_master_key(r.key) + "\n";
    out += "PT = " + r.plaintext + "\n";
    out += "CT = " + r.ciphertext + "\n";
  }
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back({number, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++number;
  }
  return lines;
}

std::size_t parse_number(std::string_view digits, const Line& line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ParseError("expected a decimal number, got '" + std::string(digits) + "'",
                     line.number);
  }
  return value;
}

std::string_view field(const Line& line, std::string_view name) {
  const std::string prefix = std::string(name) + " = ";
  if (line.text.substr(0, prefix.size()) != prefix) {
    throw ParseError("expected '" + std::string(name) + " = ...', got '" +
                         std::string(line.text) + "'",
                     line.number);
  }
  return line.text.substr(prefix.size());
}

}  // namespace

KatFile parse(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty file", 1);

  KatFile file;
  constexpr std::string_view kMarker = " KAT v";
  const Line& head = lines[0];
  const auto marker = head.text.find(kMarker);
  if (head.text.substr(0, 2) != "# " || marker == std::string_view::npos || marker <= 2) {
    throw ParseError("expected header '# eFPE KAT v1'", head.number);
  }
  file.algorithm = std::string(head.text.substr(2, marker - 2));
  file.version = static_cast<unsigned>(parse_number(head.text.substr(marker + kMarker.size()), head));

  if (lines.size() < 2) throw ParseError("missing ROUNDS line", head.number + 1);
  const std::size_t rounds = parse_number(field(lines[1], "ROUNDS"), lines[1]);
  if (rounds < kMinRounds || rounds > kMaxRounds) {
    throw ParseError("ROUNDS out of range", lines[1].number);
  }
  file.rounds = static_cast<unsigned>(rounds);

  std::size_t i = 2;
  while (i < lines.size()) {
    if (i + 4 > lines.size()) {
      throw ParseError("truncated record", lines.back().number);
    }
    KatRecord rec;
    rec.index = parse_number(field(lines[i], "COUNT"), lines[i]);
    if (rec.index != file.records.size()) {
      throw ParseError("expected COUNT = " + std::to_string(file.records.size()),
                       lines[i].number);
    }
    try {
      rec.key = parse_master_key(field(lines[i + 1], "KEY"));
    } catch (const MalformedKey& e) {
      throw ParseError(e.what(), lines[i + 1].number);
    }
    rec.plaintext = std::string(field(lines[i + 2], "PT"));
    rec.ciphertext = std::string(field(lines[i + 3], "CT"));
    if (!is_valid_numeric(rec.plaintext)) {
      throw ParseError("PT is not an even-length digit string", lines[i + 2].number);
    }
    if (!is_valid_numeric(rec.ciphertext) || rec.ciphertext.size() != rec.plaintext.size()) {
      throw ParseError("CT must be digits of the same length as PT", lines[i + 3].number);
    }
    file.records.push_back(std::move(rec));
    i += 4;
  }
  return file;
}

KatFile read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<std::size_t> VerificationReport::failing_indices() const {
  std::vector<std::size_t> out;
  for (const auto& r : records) {
    if (!r.passed()) out.push_back(r.index);
  }
  return out;
}

bool VerificationReport::passed() const { return failing_indices().empty(); }

VerificationReport verify_vectors(const KatFile& file) {
  VerificationReport report;
  if (file.records.empty()) report.warnings.push_back("file contains no records");
  for (const auto& rec : file.records) {
    const Cipher cipher(rec.key, file.rounds);
    RecordResult result;
    result.index = rec.index;
    result.expected = rec.ciphertext;
    result.actual = cipher.encrypt(rec.plaintext);
    result.encrypt_ok = result.actual == rec.ciphertext;
    result.decrypt_ok = cipher.decrypt(rec.ciphertext) == rec.plaintext;
    report.records.push_back(std::move(result));
  }
  return report;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  std::size_t failed = 0;
  for (const auto& r : report.records) {
    if (r.passed()) continue;
    ++failed;
    os << "record " << r.index << ": FAIL";
    if (!r.encrypt_ok) os << " (expected CT " << r.expected << ", computed " << r.actual << ")";
    if (!r.decrypt_ok) os << " (decrypt mismatch)";
    os << "\n";
  }
  os << report.records.size() - failed << "/" << report.records.size() << " records passed: "
     << (failed == 0 ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace efpe::kat
