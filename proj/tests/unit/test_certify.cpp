#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qrk/certify.hpp"
#include "qrk/errors.hpp"
#include "qrk/rng.hpp"
#include "support/oracles.hpp"

using namespace qrk;

namespace {

BitStream repeat(const std::string& unit, std::size_t n) {
  std::string s;
  while (s.size() < n) s += unit;
  return BitStream::from_string(s.substr(0, n));
}

BitStream flipped(BitStream s) {
  for (auto& b : s.bits) b ^= 1u;
  return s;
}

}  // namespace

TEST_CASE("block_frequencies") {
  auto c = block_frequencies(BitStream::from_string("010101"), 2);
  CHECK(c.count("01") == 3);
  CHECK(c.count("00") == 0);
  CHECK(c.count("10") == 0);
  CHECK(c.count("11") == 0);

  c = block_frequencies(BitStream::from_string("0011"), 1);
  CHECK(c.count("0") == 2);
  CHECK(c.count("1") == 2);

  c = block_frequencies(BitStream::from_string("00110"), 2);
  CHECK(c.count("00") == 1);
  CHECK(c.count("11") == 1);
  CHECK(c.total() == 2);

  try {
    block_frequencies(BitStream::from_string("01"), 3);
    FAIL("expected BlockTooLong");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BlockTooLong);
  }
  CHECK_THROWS_AS(block_frequencies(BitStream::from_string("01"), 0), Error);
  CHECK(block_label(5, 4) == "0101");
}

TEST_CASE("property: counting conservation and refinement") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    BitStream s;
    s.bits.resize(2 + rng() % 300);
    for (auto& b : s.bits) b = rng() & 1u;
    for (std::size_t m = 1; m <= std::min<std::size_t>(6, s.length()); ++m) {
      const auto c = block_frequencies(s, m);
      CHECK(c.total() == s.length() / m);
      // Agrees with the string-keyed counting oracle.
      const auto ref = oracle::count_blocks(s.to_string(), m);
      for (const auto& [block, n] : ref) CHECK(c.count(block) == n);
    }
    if (s.length() % 2 == 0) {
      const auto c1 = block_frequencies(s, 1);
      const auto c2 = block_frequencies(s, 2);
      CHECK(c1.count("0") == 2 * c2.count("00") + c2.count("01") + c2.count("10"));
    }
  }
}

TEST_CASE("borel_normality verdicts") {
  const auto zeros = borel_normality(repeat("0", 1024));
  CHECK_FALSE(zeros.pass);
  CHECK_FALSE(zeros.levels[0].pass);
  CHECK(zeros.levels[0].max_deviation == 0.5);
  CHECK(std::abs(zeros.threshold - std::sqrt(10.0 / 1024.0)) < 1e-15);

  const auto alt = borel_normality(repeat("01", 1024));
  CHECK(alt.max_block == 3);
  CHECK(alt.levels[0].pass);
  CHECK_FALSE(alt.levels[1].pass);
  CHECK(alt.levels[1].deviations[0] == 0.25);  // "00" never occurs
  CHECK_FALSE(alt.pass);

  CHECK(borel_normality(repeat("01", 1024), 1).pass);
  CHECK_THROWS_AS(borel_normality(BitStream::from_string("010")), Error);
  CHECK(default_max_block(4) == 1);
  CHECK(default_max_block(65536) == 4);
}

TEST_CASE("ties at the threshold pass") {
  // n = 16: threshold sqrt(4/16) = 0.5; all zeros deviates by exactly 0.5 at m = 1.
  const auto r = borel_normality(repeat("0", 16));
  CHECK(r.max_block == 2);
  CHECK(r.levels[0].max_deviation == 0.5);
  CHECK(r.levels[0].pass);
}

TEST_CASE("binary Champernowne prefix of 2^16 bits against the counting oracle") {
  const std::size_t n = 1 << 16;
  const auto bits = champernowne_bits(n);
  const std::string ref = oracle::champernowne_binary_reference(n);
  CHECK(bits.to_string() == ref);

  const auto r = borel_normality(bits);
  CHECK(r.max_block == 4);
  CHECK(r.threshold == 1.0 / 64.0);
  // Oracle deviations, frozen: 0.0228271484375, 0.02825927734375, 0.024702449073..., 0.01898193359375.
  const double frozen[4] = {0.0228271484375, 0.02825927734375, 0.024702449073014415, 0.01898193359375};
  for (std::size_t m = 1; m <= 4; ++m) {
    CAPTURE(m);
    CHECK(std::abs(r.levels[m - 1].max_deviation - oracle::max_block_deviation(ref, m)) < 1e-15);
    CHECK(std::abs(r.levels[m - 1].max_deviation - frozen[m - 1]) < 1e-12);
    // The leading-one bias of a prefix this short exceeds 1/64 at every block length.
    CHECK_FALSE(r.levels[m - 1].pass);
  }
}

TEST_CASE("property: normality verdict is invariant under complement") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const double p = 0.3 + 0.4 * (t / 100.0);
    BitStream s;
    s.bits.resize(64 + rng() % 4000);
    std::bernoulli_distribution coin(p);
    for (auto& b : s.bits) b = coin(rng);
    const auto a = borel_normality(s);
    const auto b = borel_normality(flipped(s));
    CHECK(a.pass == b.pass);
    for (std::size_t m = 0; m < a.levels.size(); ++m) {
      CHECK(a.levels[m].pass == b.levels[m].pass);
      CHECK(std::abs(a.levels[m].max_deviation - b.levels[m].max_deviation) < 1e-15);
    }
  }
}

TEST_CASE("champernowne digits") {
  CHECK(champernowne_digits(10, 10) == "1234567891");
  CHECK(champernowne_digits(15, 10) == "123456789101112");
  CHECK(champernowne_digits(6, 2) == "110111");
  CHECK(champernowne_digits(0, 10).empty());
  CHECK(champernowne_bits(0).length() == 0);
  try {
    champernowne_digits(5, 3);
    FAIL("expected UnsupportedBase");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedBase);
  }
}

TEST_CASE("bias") {
  CHECK(bias(BitStream::from_string("1111")) == 1.0);
  CHECK(bias(BitStream::from_string("0101")) == 0.5);
  CHECK(std::abs(bias(simulate_coin(std::numbers::pi / 4, 1'000'000, 8)) - 0.5) <= 4 * 0.5 / 1000.0);
  try {
    bias(BitStream{});
    FAIL("expected EmptyStream");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyStream);
  }
}

TEST_CASE("regenerating predictor") {
  const auto champ = champernowne_bits(1 << 16);
  CHECK(champernowne_predictor_score(champ).accuracy() == 1.0);
  const auto coin = simulate_coin(std::numbers::pi / 4, 1 << 16, 21);
  CHECK(std::abs(champernowne_predictor_score(coin).accuracy() - 0.5) <= 4 * 0.5 / 256.0);
}
