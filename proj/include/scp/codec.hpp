#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <span>
#include <vector>

#include "scp/portrait.hpp"
#include "scp/sign_vector.hpp"

namespace scp {

// Bits of a byte, most significant first.
std::array<std::uint8_t, 8> byte_to_column(std::uint8_t byte) noexcept;

// 0 -> +1, 1 -> -1. Throws dimension_error for fewer than 3 bits and
// format_error for entries other than 0 and 1.
SignVector bits_to_signs(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> signs_to_bits(const SignVector& T);

// tau x t matrix over {0,1}, row-major, addressed 1-based like SignVector.
class BitPlaneMatrix {
public:
    // Throws dimension_error if t < 3 or tau == 0, format_error if
    // bits.size() != tau*t or an entry is not 0/1.
    BitPlaneMatrix(std::uint64_t tau, Dimension t, std::vector<std::uint8_t> bits);

    // 8 x n matrix whose column j is byte j, MSB in row 1.
    static BitPlaneMatrix from_bytes(std::span<const std::uint8_t> data);

    std::uint64_t rows_count() const noexcept { return tau_; }
    Dimension columns() const noexcept { return t_; }
    std::uint8_t at(std::uint64_t row, Dimension column) const;
    std::span<const std::uint8_t> row(std::uint64_t row) const;

    // Inverse of from_bytes; requires tau == 8.
    std::vector<std::uint8_t> to_bytes() const;

    Portrait encode() const;
    static BitPlaneMatrix decode(const Portrait& p);

private:
    std::uint64_t tau_;
    Dimension t_;
    std::vector<std::uint8_t> bits_;
};

// Bit-plane portrait: t = byte count, tau = 8, row i holds bit i (MSB = row 1)
// of every byte. Rows are decomposed concurrently for large inputs.
// Throws dimension_error for fewer than 3 bytes.
Portrait encode_matrix(std::span<const std::uint8_t> data);

// Single-row portrait of the input's bit stream, MSB first per byte,
// t = 8 * byte count. Throws dimension_error for empty input.
Portrait encode_vector(std::span<const std::uint8_t> data);

// encode_vector over a stream of known length, reading it once in chunks.
// Working memory is one read chunk plus the recorded indices; when
// `peak_aux_bytes` is given it receives that amount at its peak.
// Throws io_error when the stream ends early.
Portrait encode_vector_stream(std::istream& in, std::uint64_t byte_count,
                              std::size_t* peak_aux_bytes = nullptr);

// Original bytes of a portrait produced by encode_matrix or encode_vector.
// Throws format_error when matrix mode has tau != 8 or vector mode has
// t not divisible by 8, and invalid_portrait when a row fails to recompose.
std::vector<std::uint8_t> decode(const Portrait& p);

}  // namespace scp
