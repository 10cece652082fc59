#include "qrk/certify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qrk/errors.hpp"
#include "qrk/format.hpp"

namespace qrk {

using nlohmann::json;

std::uint64_t BlockCounts::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::uint64_t BlockCounts::count(std::string_view block) const {
  if (block.size() != m) throw Error(ErrorCode::PreconditionViolated, "block length differs from m");
  std::uint64_t v = 0;
  for (char c : block) {
    if (c != '0' && c != '1') throw Error(ErrorCode::PreconditionViolated, "block must be a bit string");
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return counts[v];
}

std::string block_label(std::uint64_t value, std::size_t m) {
  std::string s(m, '0');
  for (std::size_t i = 0; i < m; ++i) {
    if ((value >> (m - 1 - i)) & 1u) s[i] = '1';
  }
  return s;
}

BlockCounts block_frequencies(const BitStream& bits, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::PreconditionViolated, "block length must be at least 1");
  if (m > bits.length()) {
    throw Error(ErrorCode::BlockTooLong, "block length " + std::to_string(m) + " exceeds stream length " +
                                             std::to_string(bits.length()));
  }
  if (m > kMaxBlockLength) {
    throw Error(ErrorCode::BlockTooLong, "block length " + std::to_string(m) + " exceeds the table limit");
  }
  BlockCounts out{m, std::vector<std::uint64_t>(std::size_t{1} << m, 0)};
  const std::size_t blocks = bits.length() / m;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < m; ++i) v = (v << 1) | bits.bits[b * m + i];
    ++out.counts[v];
  }
  return out;
}

std::size_t default_max_block(std::size_t n) {
  if (n < 4) return 1;
  const double ll = std::log2(std::log2(static_cast<double>(n)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(ll)));
}

NormalityReport borel_normality(const BitStream& bits, std::optional<std::size_t> max_m) {
  const std::size_t n = bits.length();
  if (n < 4) throw Error(ErrorCode::StreamTooShort, "normality needs at least 4 bits, got " + std::to_string(n));
  if (max_m && *max_m == 0) throw Error(ErrorCode::PreconditionViolated, "maximum block length must be >= 1");

  NormalityReport r;
  r.n = n;
  r.max_block = default_max_block(n);
  if (max_m) r.max_block = std::min(r.max_block, *max_m);
  r.threshold = std::sqrt(std::log2(static_cast<double>(n)) / static_cast<double>(n));
  r.pass = true;
  for (std::size_t m = 1; m <= r.max_block; ++m) {
    BlockLevel level;
    level.m = m;
    level.counts = block_frequencies(bits, m);
    level.blocks = n / m;
    level.threshold = r.threshold;
    const double expected = std::ldexp(1.0, -static_cast<int>(m));
    level.pass = true;
    for (auto c : level.counts.counts) {
      const double f = static_cast<double>(c) / static_cast<double>(level.blocks);
      const double d = std::abs(f - expected);
      level.frequencies.push_back(f);
      level.deviations.push_back(d);
      level.max_deviation = std::max(level.max_deviation, d);
      level.pass = level.pass && d <= level.threshold;
    }
    r.pass = r.pass && level.pass;
    r.levels.push_back(std::move(level));
  }
  return r;
}

std::string normality_to_json(const NormalityReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    json blocks = json::object();
    for (std::size_t v = 0; v < l.counts.counts.size(); ++v) {
      blocks[block_label(v, l.m)] = {{"count", l.counts.counts[v]},
                                     {"frequency", round_significant(l.frequencies[v])},
                                     {"deviation", round_significant(l.deviations[v])}};
    }
    levels.push_back({{"m", l.m},
                      {"blocks", l.blocks},
                      {"threshold", round_significant(l.threshold)},
                      {"max_deviation", round_significant(l.max_deviation)},
                      {"pass", l.pass},
                      {"frequencies", std::move(blocks)}});
  }
  return json{{"n", r.n},
              {"max_block", r.max_block},
              {"threshold", round_significant(r.threshold)},
              {"pass", r.pass},
              {"levels", std::move(levels)}}
             .dump(2) +
         "\n";
}

std::string normality_to_text(const NormalityReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << ", block lengths 1.." << r.max_block << ", threshold "
      << format_number(r.threshold) << "\n";
  out << std::left << std::setw(4) << "m" << std::setw(10) << "blocks" << std::setw(20) << "max deviation"
      << "verdict\n";
  for (const auto& l : r.levels) {
    out << std::left << std::setw(4) << l.m << std::setw(10) << l.blocks << std::setw(20)
        << format_number(l.max_deviation) << (l.pass ? "pass" : "FAIL") << "\n";
  }
  out << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

ChampernowneDigits::ChampernowneDigits(unsigned base) : base_(base) {
  if (base != 2 && base != 10) {
    throw Error(ErrorCode::UnsupportedBase, "base " + std::to_string(base) + " (only 2 and 10)");
  }
}

unsigned ChampernowneDigits::next() {
  if (pos_ == 0) {
    ++number_;
    digits_.clear();
    for (auto x = number_; x > 0; x /= base_) digits_.push_back(static_cast<unsigned>(x % base_));
    pos_ = digits_.size();
  }
  return digits_[--pos_];
}

std::string champernowne_digits(std::size_t n, unsigned base) {
  ChampernowneDigits gen(base);
  std::string out(n, '0');
  for (auto& c : out) c = static_cast<char>('0' + gen.next());
  return out;
}

BitStream champernowne_bits(std::size_t n) {
  ChampernowneDigits gen(2);
  BitStream s;
  s.source = "champernowne-2";
  s.bits.resize(n);
  for (auto& b : s.bits) b = static_cast<std::uint8_t>(gen.next());
  return s;
}

double bias(const BitStream& bits) {
  if (bits.length() == 0) throw Error(ErrorCode::EmptyStream, "bias of an empty stream");
  std::size_t ones = 0;
  for (auto b : bits.bits) ones += b;
  return static_cast<double>(ones) / static_cast<double>(bits.length());
}

PredictionScore champernowne_predictor_score(const BitStream& bits) {
  ChampernowneDigits gen(2);
  PredictionScore score;
  for (auto b : bits.bits) {
    score.hits += gen.next() == b;
    ++score.total;
  }
  return score;
}

}  // namespace qrk
