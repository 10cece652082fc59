#pragma once

// Bit files.
//
// ASCII (default): the characters '0' and '1', no separators, no newline.
// Packed: a header line "len=<n>\n" followed by ceil(n/8) bytes, most
// significant bit first, the last byte zero-padded. Readers detect the packed
// form by its "len=" prefix.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qrk/rng.hpp"

namespace qrk {

enum class BitFormat { Ascii, Packed };

std::string encode_bits(const BitStream& s, BitFormat format = BitFormat::Ascii);

/// Accepts either format; a single trailing newline after ASCII bits is tolerated.
/// Throws ParseError.
BitStream decode_bits(std::string_view data, std::string source = "file");

BitStream read_bits(std::istream& in, std::string source = "stream");
BitStream read_bits(const std::filesystem::path& path);
void write_bits(std::ostream& out, const BitStream& s, BitFormat format = BitFormat::Ascii);
void write_bits(const std::filesystem::path& path, const BitStream& s, BitFormat format = BitFormat::Ascii);

}  // namespace qrk
