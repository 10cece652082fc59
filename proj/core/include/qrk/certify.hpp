#pragma once

// Borel normality of finite bit strings, and the Champernowne sequence as a
// normal-looking but perfectly predictable counterexample.
//
// A string of length n passes at block length m when, counting its floor(n/m)
// non-overlapping m-blocks, every one of the 2^m blocks has frequency within
// sqrt(log2(n) / n) of 2^-m (ties pass). Block lengths 1..floor(log2 log2 n)
// are checked, at least 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrk/rng.hpp"

namespace qrk {

/// Largest block length block_frequencies() will tabulate.
inline constexpr std::size_t kMaxBlockLength = 24;

struct BlockCounts {
  std::size_t m = 0;
  /// counts[v] is the count of the block whose bits, most significant first, spell v.
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const noexcept;
  /// Throws PreconditionViolated if `block` is not an m-character bit string.
  std::uint64_t count(std::string_view block) const;
};

/// "0101" style label for block value v of length m.
std::string block_label(std::uint64_t value, std::size_t m);

/// Throws BlockTooLong when m > n or m > kMaxBlockLength; PreconditionViolated when m == 0.
BlockCounts block_frequencies(const BitStream& bits, std::size_t m);

struct BlockLevel {
  std::size_t m = 0;
  std::uint64_t blocks = 0;
  double threshold = 0.0;
  BlockCounts counts;
  std::vector<double> frequencies;
  std::vector<double> deviations;
  double max_deviation = 0.0;
  bool pass = false;
};

struct NormalityReport {
  std::size_t n = 0;
  std::size_t max_block = 0;
  double threshold = 0.0;
  std::vector<BlockLevel> levels;
  bool pass = false;
};

/// floor(log2 log2 n), at least 1.
std::size_t default_max_block(std::size_t n);

/// Throws StreamTooShort when n < 4.
NormalityReport borel_normality(const BitStream& bits, std::optional<std::size_t> max_m = std::nullopt);

std::string normality_to_json(const NormalityReport& r);
std::string normality_to_text(const NormalityReport& r);

/// Streams the digits of 1, 2, 3, ... written in `base` (2 or 10).
class ChampernowneDigits {
 public:
  /// Throws UnsupportedBase.
  explicit ChampernowneDigits(unsigned base);

  unsigned next();

 private:
  unsigned base_;
  std::uint64_t number_ = 0;
  std::vector<unsigned> digits_;  // current number, least significant first
  std::size_t pos_ = 0;
};

/// First n digits as characters, e.g. base 10, n = 10 -> "1234567891".
std::string champernowne_digits(std::size_t n, unsigned base);

/// Base-2 Champernowne prefix as a bit stream.
BitStream champernowne_bits(std::size_t n);

/// Ones frequency. Throws EmptyStream.
double bias(const BitStream& bits);

struct PredictionScore {
  std::size_t hits = 0;
  std::size_t total = 0;
  double accuracy() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
  }
};

/// Scores a next-bit predictor that regenerates the binary Champernowne
/// sequence and always guesses its next bit.
PredictionScore champernowne_predictor_score(const BitStream& bits);

}  // namespace qrk
