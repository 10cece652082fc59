#pragma once

// Simulated quantum coin and von Neumann normalization.
//
// Pseudo-randomness: std::mt19937_64, whose output sequence is fixed by the
// C++ standard, seeded with the SplitMix64 finalizer of the user seed. Sub-
// streams (sweep rows) use derive_seed(seed, row). A uniform double is the top
// 53 bits of one draw times 2^-53, so u < p is never true for p = 0 and always
// true for p = 1. Nothing here is meant to be cryptographically strong.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qrk/hilbert.hpp"

namespace qrk {

struct BitStream {
  std::vector<std::uint8_t> bits;
  std::string source;
  std::uint64_t seed = 0;
  std::optional<double> tilt;

  std::size_t length() const noexcept { return bits.size(); }

  static BitStream from_string(std::string_view zeros_and_ones, std::string source = "literal");
  std::string to_string() const;
};

/// SplitMix64 output function applied to `x`.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent seed for sub-stream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// n draws, each 1 with probability sin^2(phi): the state (1,0) measured in
/// tilt_basis(phi). Throws NonFiniteAngle.
BitStream simulate_coin(double phi, std::size_t n, std::uint64_t seed);

struct OutcomeStream {
  std::vector<std::uint32_t> outcomes;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
};

/// n outcomes distributed as context_probabilities(pre, ctx). Probabilities
/// below 1e-12 count as impossible, so a matched context gives a constant stream.
OutcomeStream simulate_context(const Ket& pre, const ContextBasis& ctx, std::size_t n, std::uint64_t seed);

struct ExtractorStats {
  std::size_t consumed = 0;
  std::size_t discarded = 0;
  std::size_t emitted = 0;
  std::size_t output_length = 0;
};

struct Extraction {
  BitStream bits;
  ExtractorStats stats;
};

/// Non-overlapping pairs: 00 and 11 are dropped, 01 -> 0, 10 -> 1. An odd
/// trailing bit is dropped.
Extraction von_neumann_extract(const BitStream& raw);

struct SweepRow {
  double phi = 0.0;
  std::uint64_t seed = 0;
  double raw_frequency = 0.0;
  std::size_t extracted_length = 0;
  /// Empty when nothing survived extraction.
  std::optional<double> extracted_frequency;
};

/// One simulate_coin + von_neumann_extract per angle; row i uses
/// derive_seed(seed, i). Throws PreconditionViolated when n < 2.
std::vector<SweepRow> transition_sweep(std::span<const double> phis, std::size_t n, std::uint64_t seed);

}  // namespace qrk
