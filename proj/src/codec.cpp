#include "scp/codec.hpp"

#include <future>
#include <string>

#include "bit_util.hpp"
#include "scp/cycle.hpp"
#include "scp/decompose.hpp"
#include "scp/error.hpp"

namespace scp {

namespace {

// Below this many bytes, spawning threads for the eight planes costs more
// than it saves.
constexpr std::size_t parallel_threshold = std::size_t{1} << 16;

constexpr std::size_t stream_chunk = std::size_t{1} << 16;

// Plane `row` (1 = MSB) of the bytes as a sign vector.
SignVector byte_plane(std::span<const std::uint8_t> data, unsigned row) {
    SignVector v(data.size());
    auto words = v.mutable_words();
    const unsigned shift = 8 - row;
    for (std::size_t j = 0; j < data.size(); ++j)
        words[j / 64] |= static_cast<std::uint64_t>((data[j] >> shift) & 1u) << (j % 64);
    return v;
}

template <typename MakeRow>
std::vector<CycleIndexSet> decompose_rows(std::uint64_t tau, bool parallel, MakeRow make_row) {
    std::vector<CycleIndexSet> rows;
    rows.reserve(tau);
    if (!parallel) {
        for (std::uint64_t i = 1; i <= tau; ++i)
            rows.push_back(decompose(make_row(i)));
        return rows;
    }
    std::vector<std::future<CycleIndexSet>> pending;
    pending.reserve(tau);
    for (std::uint64_t i = 1; i <= tau; ++i)
        pending.push_back(std::async(std::launch::async, [&make_row, i] {
            return decompose(make_row(i));
        }));
    for (auto& f : pending)
        rows.push_back(f.get());
    return rows;
}

}  // namespace

std::array<std::uint8_t, 8> byte_to_column(std::uint8_t byte) noexcept {
    std::array<std::uint8_t, 8> bits{};
    for (unsigned i = 0; i < 8; ++i)
        bits[i] = (byte >> (7 - i)) & 1u;
    return bits;
}

SignVector bits_to_signs(std::span<const std::uint8_t> bits) {
    SignVector v(bits.size());
    auto words = v.mutable_words();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1)
            throw format_error("bit entry " + std::to_string(i + 1) + " is not 0 or 1");
        words[i / 64] |= static_cast<std::uint64_t>(bits[i]) << (i % 64);
    }
    return v;
}

std::vector<std::uint8_t> signs_to_bits(const SignVector& T) {
    std::vector<std::uint8_t> bits(T.size());
    const auto words = T.words();
    for (std::size_t i = 0; i < bits.size(); ++i)
        bits[i] = (words[i / 64] >> (i % 64)) & 1u;
    return bits;
}

BitPlaneMatrix::BitPlaneMatrix(std::uint64_t tau, Dimension t, std::vector<std::uint8_t> bits)
    : tau_(tau), t_(t), bits_(std::move(bits)) {
    check_dimension(t);
    if (tau_ == 0)
        throw dimension_error("bit matrix needs at least one row");
    if (bits_.size() / tau_ != t_ || bits_.size() % tau_ != 0)
        throw format_error("bit matrix holds " + std::to_string(bits_.size()) +
                           " entries, expected " + std::to_string(tau_) + "x" +
                           std::to_string(t_));
    for (auto b : bits_)
        if (b > 1)
            throw format_error("bit matrix entries must be 0 or 1");
}

BitPlaneMatrix BitPlaneMatrix::from_bytes(std::span<const std::uint8_t> data) {
    const std::size_t n = data.size();
    check_dimension(n);
    std::vector<std::uint8_t> bits(8 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto column = byte_to_column(data[j]);
        for (std::size_t i = 0; i < 8; ++i)
            bits[i * n + j] = column[i];
    }
    return BitPlaneMatrix(8, n, std::move(bits));
}

std::uint8_t BitPlaneMatrix::at(std::uint64_t row, Dimension column) const {
    if (row < 1 || row > tau_ || column < 1 || column > t_)
        throw range_error("bit matrix position out of range");
    return bits_[(row - 1) * t_ + (column - 1)];
}

std::span<const std::uint8_t> BitPlaneMatrix::row(std::uint64_t row) const {
    if (row < 1 || row > tau_)
        throw range_error("bit matrix row out of range");
    return std::span<const std::uint8_t>(bits_).subspan((row - 1) * t_, t_);
}

std::vector<std::uint8_t> BitPlaneMatrix::to_bytes() const {
    if (tau_ != 8)
        throw format_error("only 8-row bit matrices map to bytes");
    std::vector<std::uint8_t> out(t_, 0);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < t_; ++j)
            out[j] |= static_cast<std::uint8_t>(bits_[i * t_ + j] << (7 - i));
    return out;
}

Portrait BitPlaneMatrix::encode() const {
    auto rows = decompose_rows(tau_, tau_ > 1 && t_ * tau_ >= 8 * parallel_threshold,
                               [this](std::uint64_t i) { return bits_to_signs(row(i)); });
    return Portrait(PortraitMode::matrix, t_, tau_, std::move(rows));
}

BitPlaneMatrix BitPlaneMatrix::decode(const Portrait& p) {
    std::vector<std::uint8_t> bits;
    bits.reserve(p.rows_count() * p.dimension());
    for (const auto& set : p.rows()) {
        const auto row_bits = signs_to_bits(recompose(set));
        bits.insert(bits.end(), row_bits.begin(), row_bits.end());
    }
    return BitPlaneMatrix(p.rows_count(), p.dimension(), std::move(bits));
}

Portrait encode_matrix(std::span<const std::uint8_t> data) {
    check_dimension(data.size());
    auto rows = decompose_rows(8, data.size() >= parallel_threshold,
                               [data](std::uint64_t i) {
                                   return byte_plane(data, static_cast<unsigned>(i));
                               });
    return Portrait(PortraitMode::matrix, data.size(), 8, std::move(rows));
}

Portrait encode_vector(std::span<const std::uint8_t> data) {
    if (data.empty())
        throw dimension_error("vector mode needs at least one byte");
    DecomposeStream stream(8 * static_cast<Dimension>(data.size()));
    for (auto b : data)
        stream.push_byte(b);
    std::vector<CycleIndexSet> rows;
    rows.reserve(1);
    rows.push_back(stream.finish());
    return Portrait(PortraitMode::vector, stream.dimension(), 1, std::move(rows));
}

Portrait encode_vector_stream(std::istream& in, std::uint64_t byte_count,
                              std::size_t* peak_aux_bytes) {
    if (byte_count == 0)
        throw dimension_error("vector mode needs at least one byte");
    if (byte_count > max_dimension / 8)
        throw dimension_error("input too large for a single-row portrait");
    DecomposeStream stream(8 * byte_count);
    std::vector<char> buffer(stream_chunk);
    std::uint64_t remaining = byte_count;
    while (remaining > 0) {
        const auto want = static_cast<std::streamsize>(
            std::min<std::uint64_t>(remaining, buffer.size()));
        in.read(buffer.data(), want);
        const auto got = in.gcount();
        if (got <= 0)
            throw io_error("input ended after " + std::to_string(byte_count - remaining) +
                           " of " + std::to_string(byte_count) + " bytes");
        for (std::streamsize i = 0; i < got; ++i)
            stream.push_byte(static_cast<std::uint8_t>(buffer[static_cast<std::size_t>(i)]));
        remaining -= static_cast<std::uint64_t>(got);
    }
    if (peak_aux_bytes)
        *peak_aux_bytes = buffer.capacity() + stream.footprint_bytes();
    std::vector<CycleIndexSet> rows;
    rows.reserve(1);
    rows.push_back(stream.finish());
    return Portrait(PortraitMode::vector, stream.dimension(), 1, std::move(rows));
}

std::vector<std::uint8_t> decode(const Portrait& p) {
    if (p.mode() == PortraitMode::matrix) {
        if (p.rows_count() != 8)
            throw format_error("matrix-mode portrait with " + std::to_string(p.rows_count()) +
                               " rows does not map to bytes");
        std::vector<std::uint8_t> out(p.dimension(), 0);
        for (unsigned i = 0; i < 8; ++i) {
            const SignVector row = recompose(p.rows()[i]);
            const auto words = row.words();
            for (std::size_t j = 0; j < out.size(); ++j)
                out[j] |= static_cast<std::uint8_t>(((words[j / 64] >> (j % 64)) & 1u) << (7 - i));
        }
        return out;
    }
    if (p.dimension() % 8 != 0)
        throw format_error("vector-mode portrait dimension " + std::to_string(p.dimension()) +
                           " is not a whole number of bytes");
    const SignVector bits = recompose(p.rows().front());
    const auto words = bits.words();
    std::vector<std::uint8_t> out(p.dimension() / 8);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = detail::reversed_bytes[(words[j / 8] >> (8 * (j % 8))) & 0xFFu];
    return out;
}

}  // namespace scp
