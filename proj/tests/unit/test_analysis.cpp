#include <gtest/gtest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "efpe/analysis.hpp"
#include "efpe/cipher.hpp"
#include "efpe/errors.hpp"

using namespace efpe;
using namespace efpe::analysis;

namespace {

/*
* Test double: the same Feistel network but combining with XOR followed by
* mod 10^m. That combiner is not invertible, so small-domain enumeration
* must catch it.
*/
class XorCombinerCipher {
 public:
  explicit XorCombinerCipher(const MasterKey& key) : keys_(derive_round_keys(key)) {}

  std::string encrypt(std::string_view text) const {
    BlockState s = split_halves(text);
    const Modulus mod(s.m);
    for (unsigned i = 0; i < keys_.rounds(); ++i) {
      const std::uint64_t next = (s.left ^ round_f(s.right, keys_[i], i, mod)) % mod.value();
      s.left = s.right;
      s.right = next;
    }
    return join_halves(s);
  }

  std::string decrypt(std::string_view text) const {
    BlockState s = split_halves(text);
    const Modulus mod(s.m);
    for (unsigned i = keys_.rounds(); i-- > 0;) {
      const std::uint64_t prev_left = (s.right ^ round_f(s.left, keys_[i], i, mod)) % mod.value();
      s.right = s.left;
      s.left = prev_left;
    }
    return join_halves(s);
  }

 private:
  RoundKeySet keys_;
};

const MasterKey kKey = parse_master_key("2b7e151628aed2a6abf7158809cf4f3c");

}  // namespace

TEST(SecurityBits, TableValues) {
  EXPECT_NEAR(security_bits(4).bits, 13.3, 0.05);
  EXPECT_NEAR(security_bits(8).bits, 26.6, 0.05);
  EXPECT_NEAR(security_bits(12).bits, 39.9, 0.05);
  EXPECT_NEAR(security_bits(16).bits, 53.2, 0.05);
  EXPECT_EQ(security_bits(4).attack_ops, 10000u);
  EXPECT_EQ(security_bits(16).attack_ops, 10000000000000000ull);
}

TEST(SecurityBits, ConstantRatio) {
  for (unsigned m = 1; m <= 16; ++m) {
    EXPECT_NEAR(security_bits(m).bits / m, std::log2(10.0), 1e-12);
    EXPECT_NEAR(security_bits(m).bits, std::log2(std::pow(10.0, m)), 1e-9);
  }
  EXPECT_THROW(security_bits(0), InvalidArgument);
  EXPECT_THROW(security_bits(17), InvalidArgument);
}

TEST(BirthdayBound, Values) {
  EXPECT_EQ(birthday_bound_advantage(0, 8).birthday_term, 0.0);
  EXPECT_NEAR(birthday_bound_advantage(1000, 8).birthday_term, 0.01, 0.01 * 1e-12);
  EXPECT_NEAR(birthday_bound_advantage(10000, 8).birthday_term, 1.0, 1e-12);
  EXPECT_THROW(birthday_bound_advantage(1, 0), InvalidArgument);
}

TEST(BirthdayBound, Monotone) {
  for (unsigned m = 1; m <= 16; ++m) {
    double prev = -1;
    for (std::uint64_t q = 0; q <= 1000000; q += 997) {
      const double v = birthday_bound_advantage(q, m).birthday_term;
      ASSERT_GE(v, prev);
      prev = v;
      if (m > 1) ASSERT_LE(v, birthday_bound_advantage(q, m - 1).birthday_term);
    }
  }
}

TEST(Bijectivity, PassesForRealCipher) {
  const auto two = bijectivity_check(kKey, 2);
  EXPECT_TRUE(two.passed);
  EXPECT_EQ(two.distinct_outputs, 100u);
  const auto four = bijectivity_check(kKey, 4);
  EXPECT_TRUE(four.passed);
  EXPECT_EQ(four.distinct_outputs, 10000u);
}

TEST(Bijectivity, CatchesNonInvertibleCombiner) {
  const XorCombinerCipher broken(kKey);
  const auto report = bijectivity_check([&](std::string_view p) { return broken.encrypt(p); },
                                        [&](std::string_view c) { return broken.decrypt(c); }, 2);
  EXPECT_FALSE(report.passed);
}

TEST(Bijectivity, CatchesFormatViolation) {
  const auto report = bijectivity_check([](std::string_view) { return std::string("123"); },
                                        [](std::string_view c) { return std::string(c); }, 2);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.format_failures, 100u);
}

TEST(Bijectivity, OnlySmallDomains) {
  EXPECT_THROW(bijectivity_check(kKey, 6), InvalidArgument);
}

TEST(Avalanche, KeyBitFlipChangesCiphertext) {
  const auto report = avalanche_test({1000, 16, 0x5eed, false});
  EXPECT_GE(report.fraction_changed, 0.99);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.changed_per_position.size(), 16u);
  EXPECT_GT(report.mean_changed_digits, 0.0);
}

TEST(Avalanche, RestoredFlipIsControl) {
  const auto report = avalanche_test({1, 16, 7, true});
  EXPECT_EQ(report.fraction_changed, 0.0);
  EXPECT_EQ(report.mean_changed_digits, 0.0);
}

TEST(Avalanche, ReproducibleForSeed) {
  EXPECT_EQ(avalanche_test({200, 8, 99, false}), avalanche_test({200, 8, 99, false}));
  EXPECT_THROW(avalanche_test({0, 8, 99, false}), InvalidArgument);
  EXPECT_THROW(avalanche_test({10, 7, 99, false}), InvalidArgument);
}

TEST(Distribution, UniformUnderRealCipher) {
  const auto report = digit_distribution_test(kKey, 8, 100000);
  ASSERT_EQ(report.chi_square.size(), 8u);
  for (double chi : report.chi_square) EXPECT_LT(chi, 27.88);
  EXPECT_TRUE(report.passed);
}

// Counters 0..99999 leave the top three of eight digits at '0' and cycle the
// bottom five exactly uniformly, so only the leading positions blow up.
TEST(Distribution, IdentityStubFails) {
  const auto report =
      digit_distribution_test([](std::string_view p) { return std::string(p); }, 8, 100000);
  EXPECT_FALSE(report.passed);
  for (std::size_t pos = 0; pos < 3; ++pos) EXPECT_DOUBLE_EQ(report.chi_square[pos], 900000.0);
  for (std::size_t pos = 3; pos < 8; ++pos) EXPECT_DOUBLE_EQ(report.chi_square[pos], 0.0);
}

TEST(Distribution, ConstantStubFailsEveryPosition) {
  const auto report = digit_distribution_test(
      [](std::string_view p) { return std::string(p.size(), '7'); }, 8, 100000);
  EXPECT_FALSE(report.passed);
  for (double chi : report.chi_square) EXPECT_GT(chi, 1000.0);
}

TEST(Distribution, Reproducible) {
  EXPECT_EQ(digit_distribution_test(kKey, 6, 5000), digit_distribution_test(kKey, 6, 5000));
  EXPECT_THROW(digit_distribution_test(kKey, 8, 999), InvalidArgument);
}

TEST(RoundKeys, MostlyDistinct) {
  const auto report = round_key_distinctness(10000, 0x5eed);
  EXPECT_TRUE(report.schedule_inputs_distinct);
  EXPECT_GE(report.pair_fraction, 0.999);
  EXPECT_TRUE(report.passed);
}

TEST(RoundKeys, SingleRoundTriviallyPasses) {
  const auto report = round_key_distinctness(100, 1, 1);
  EXPECT_EQ(report.pairs_distinct, 100u);
  EXPECT_TRUE(report.passed);
}

TEST(RoundKeys, Reproducible) {
  EXPECT_EQ(round_key_distinctness(500, 3), round_key_distinctness(500, 3));
  EXPECT_TRUE(schedule_inputs_distinct(255));
}

TEST(Reports, JsonIsWellFormed) {
  const auto j = nlohmann::json::parse(render_json(avalanche_test({10, 4, 1, false})));
  EXPECT_EQ(j["report"], "avalanche");
  EXPECT_EQ(j["trials"], 10);
  EXPECT_EQ(nlohmann::json::parse(render_json(security_bits(8)))["attack_ops"], 100000000);
  EXPECT_EQ(nlohmann::json::parse(render_json(birthday_bound_advantage(1000, 8)))["prf_advantage"],
            "assumed");
  EXPECT_NE(render_text(security_bits(4)).find("13.3 bits"), std::string::npos);
}
