#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "scp/portrait.hpp"

namespace scp {

class BitPlaneMatrix;

// Text format ("SCP1"):
//
//   SCP1 <matrix|vector> <t> <tau>\n
//   <q_1> <k_0> ... <k_{q_1-1}>\n        (tau such lines)
//
// Decimal, single spaces, no leading zeros, no trailing whitespace.
//
// Binary format ("SCPB"): magic, one mode byte (0 matrix, 1 vector), t and
// tau as u64 little-endian, then per row q followed by q indices, all u64
// little-endian.
//
// Both readers enforce every CycleIndexSet invariant and reject trailing
// data, throwing parse_error with a line number or byte offset.

enum class PortraitFormat { text, binary };

void write_text(std::ostream& out, const Portrait& p);
std::string to_text(const Portrait& p);
Portrait read_text(std::istream& in);
Portrait parse_text(std::string_view text);

void write_binary(std::ostream& out, const Portrait& p);
std::string to_binary(const Portrait& p);
Portrait read_binary(std::istream& in);
Portrait parse_binary(std::string_view bytes);

// Format named by the first four bytes, if they are a known magic.
std::optional<PortraitFormat> detect_format(std::string_view prefix) noexcept;

// Reads either format, chosen by its magic.
Portrait read_portrait(std::istream& in);

// Raw {0,1} matrix text: one row per line, characters '0'/'1', every row
// the same length, newline-terminated. Admits any tau >= 1 and t >= 3.
void write_bit_matrix(std::ostream& out, const BitPlaneMatrix& m);
BitPlaneMatrix read_bit_matrix(std::istream& in);

}  // namespace scp
