#include "qrk/bitstream_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "qrk/errors.hpp"

namespace qrk {

namespace {

constexpr std::string_view kPackedPrefix = "len=";

}  // namespace

std::string encode_bits(const BitStream& s, BitFormat format) {
  if (format == BitFormat::Ascii) return s.to_string();
  std::string out = std::string(kPackedPrefix) + std::to_string(s.length()) + "\n";
  const std::size_t header = out.size();
  out.resize(header + (s.length() + 7) / 8, '\0');
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (s.bits[i]) out[header + i / 8] = static_cast<char>(out[header + i / 8] | (0x80 >> (i % 8)));
  }
  return out;
}

BitStream decode_bits(std::string_view data, std::string source) {
  if (!data.starts_with(kPackedPrefix)) {
    if (data.ends_with('\n')) data.remove_suffix(1);
    if (data.ends_with('\r')) data.remove_suffix(1);
    return BitStream::from_string(data, std::move(source));
  }
  const auto eol = data.find('\n');
  if (eol == std::string_view::npos) throw Error(ErrorCode::ParseError, "packed header lacks a newline");
  const auto digits = data.substr(kPackedPrefix.size(), eol - kPackedPrefix.size());
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorCode::ParseError, "bad packed length '" + std::string(digits) + "'");
  }
  const auto payload = data.substr(eol + 1);
  if (payload.size() != (n + 7) / 8) {
    throw Error(ErrorCode::ParseError, "packed payload has " + std::to_string(payload.size()) +
                                           " bytes, expected " + std::to_string((n + 7) / 8));
  }
  BitStream s;
  s.source = std::move(source);
  s.bits.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.bits[i] = (static_cast<unsigned char>(payload[i / 8]) >> (7 - i % 8)) & 1u;
  }
  return s;
}

BitStream read_bits(std::istream& in, std::string source) {
  std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return decode_bits(data, std::move(source));
}

BitStream read_bits(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_bits(in, path.filename().string());
}

void write_bits(std::ostream& out, const BitStream& s, BitFormat format) {
  const auto data = encode_bits(s, format);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

void write_bits(const std::filesystem::path& path, const BitStream& s, BitFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_bits(out, s, format);
}

}  // namespace qrk
