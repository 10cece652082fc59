#include "qrk/rng.hpp"

#include <cmath>

#include "qrk/errors.hpp"

namespace qrk {

BitStream BitStream::from_string(std::string_view zeros_and_ones, std::string source) {
  BitStream s;
  s.source = std::move(source);
  s.bits.reserve(zeros_and_ones.size());
  for (char c : zeros_and_ones) {
    if (c != '0' && c != '1') throw Error(ErrorCode::ParseError, std::string("not a bit: '") + c + "'");
    s.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return s;
}

std::string BitStream::to_string() const {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = static_cast<char>('0' + bits[i]);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(~index));
}

BitStream simulate_coin(double phi, std::size_t n, std::uint64_t seed) {
  if (!std::isfinite(phi)) throw Error(ErrorCode::NonFiniteAngle, "tilt angle must be finite");
  const double s = std::sin(phi);
  const double p = s * s;
  Rng rng(seed);
  BitStream out;
  out.source = "coin";
  out.seed = seed;
  out.tilt = phi;
  out.bits.resize(n);
  for (auto& b : out.bits) b = rng.bernoulli(p) ? 1 : 0;
  return out;
}

OutcomeStream simulate_context(const Ket& pre, const ContextBasis& ctx, std::size_t n, std::uint64_t seed) {
  auto p = context_probabilities(pre, ctx);
  double total = 0.0;
  for (auto& x : p) {
    if (x < kZeroTolerance) x = 0.0;
    total += x;
  }
  std::vector<double> cumulative(p.size());
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i] / total;
    cumulative[i] = acc;
    if (p[i] > 0.0) last = i;
  }
  // Rounding must never leave mass above the last possible outcome.
  for (std::size_t i = last; i < cumulative.size(); ++i) cumulative[i] = 1.0;

  Rng rng(seed);
  OutcomeStream out{{}, ctx.dim(), seed};
  out.outcomes.resize(n);
  for (auto& o : out.outcomes) {
    const double u = rng.uniform();
    std::uint32_t k = 0;
    while (u >= cumulative[k]) ++k;
    o = k;
  }
  return out;
}

Extraction von_neumann_extract(const BitStream& raw) {
  Extraction e;
  e.bits.source = raw.source.empty() ? "von-neumann" : raw.source + "+von-neumann";
  e.bits.seed = raw.seed;
  e.bits.tilt = raw.tilt;
  e.stats.consumed = raw.length() / 2;
  e.bits.bits.reserve(e.stats.consumed / 2);
  for (std::size_t i = 0; i + 1 < raw.length(); i += 2) {
    const auto a = raw.bits[i];
    const auto b = raw.bits[i + 1];
    if (a == b) {
      ++e.stats.discarded;
    } else {
      e.bits.bits.push_back(a);
      ++e.stats.emitted;
    }
  }
  e.stats.output_length = e.bits.length();
  return e;
}

std::vector<SweepRow> transition_sweep(std::span<const double> phis, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "sweep needs at least 2 draws per angle");
  std::vector<SweepRow> rows;
  rows.reserve(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    SweepRow row;
    row.phi = phis[i];
    row.seed = derive_seed(seed, i);
    const auto raw = simulate_coin(row.phi, n, row.seed);
    std::size_t ones = 0;
    for (auto b : raw.bits) ones += b;
    row.raw_frequency = static_cast<double>(ones) / static_cast<double>(n);
    const auto ext = von_neumann_extract(raw);
    row.extracted_length = ext.bits.length();
    if (row.extracted_length > 0) {
      std::size_t eones = 0;
      for (auto b : ext.bits.bits) eones += b;
      row.extracted_frequency = static_cast<double>(eones) / static_cast<double>(row.extracted_length);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qrk
