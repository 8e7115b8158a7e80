#include "scp/portrait_io.hpp"

#include <array>
#include <charconv>
#include <cstring>
#include <sstream>
#include <vector>

#include "scp/codec.hpp"
#include "scp/error.hpp"

namespace scp {

namespace {

constexpr std::string_view text_magic = "SCP1";
constexpr std::string_view binary_magic = "SCPB";

// Cap on up-front reservations driven by counts read from a file.
constexpr std::uint64_t reserve_cap = std::uint64_t{1} << 16;

std::string line_at(std::uint64_t line) { return "line " + std::to_string(line); }
std::string byte_at(std::uint64_t offset) { return "byte " + std::to_string(offset); }

// ---------------------------------------------------------------- text

void append_number(std::string& out, std::uint64_t value) {
    std::array<char, 20> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    out.append(buf.data(), res.ptr);
}

std::uint64_t parse_decimal(std::string_view token, std::uint64_t line) {
    if (token.empty())
        throw parse_error(line_at(line), "empty field (stray space)");
    if (token.size() > 1 && token.front() == '0')
        throw parse_error(line_at(line), "leading zero in '" + std::string(token) + "'");
    std::uint64_t value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec == std::errc::result_out_of_range)
        throw parse_error(line_at(line), "number '" + std::string(token) + "' overflows");
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw parse_error(line_at(line), "not a decimal number: '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(' ', pos);
        tokens.push_back(line.substr(pos, next == std::string_view::npos ? next : next - pos));
        if (next == std::string_view::npos)
            return tokens;
        pos = next + 1;
    }
}

// Reads one '\n'-terminated line; false at clean end of input.
bool next_line(std::istream& in, std::string& line, std::uint64_t number) {
    if (!std::getline(in, line)) {
        if (in.bad())
            throw io_error("read failure");
        return false;
    }
    if (in.eof())
        throw parse_error(line_at(number), "missing final newline");
    return true;
}

void check_header_dims(Dimension t, std::uint64_t tau, PortraitMode mode,
                       const std::string& where) {
    if (t < min_dimension || t > max_dimension)
        throw parse_error(where, "dimension " + std::to_string(t) + " outside 3..2^62");
    if (tau == 0)
        throw parse_error(where, "row count is zero");
    if (mode == PortraitMode::vector && tau != 1)
        throw parse_error(where, "vector mode requires exactly one row");
}

Portrait read_text_rest(std::istream& in, std::string header) {
    const auto tokens = split_spaces(header);
    if (tokens.size() != 4)
        throw parse_error(line_at(1), "header needs 4 fields, found " +
                                          std::to_string(tokens.size()));
    if (tokens[0] != text_magic)
        throw parse_error(line_at(1), "bad magic");
    PortraitMode mode;
    if (tokens[1] == "matrix")
        mode = PortraitMode::matrix;
    else if (tokens[1] == "vector")
        mode = PortraitMode::vector;
    else
        throw parse_error(line_at(1), "unknown mode '" + std::string(tokens[1]) + "'");
    const Dimension t = parse_decimal(tokens[2], 1);
    const std::uint64_t tau = parse_decimal(tokens[3], 1);
    check_header_dims(t, tau, mode, line_at(1));

    std::vector<CycleIndexSet> rows;
    rows.reserve(std::min(tau, reserve_cap));
    std::string line;
    for (std::uint64_t i = 1; i <= tau; ++i) {
        const std::uint64_t number = i + 1;
        if (!next_line(in, line, number))
            throw parse_error(line_at(number), "expected " + std::to_string(tau) +
                                                   " rows, input ended after " +
                                                   std::to_string(i - 1));
        const auto fields = split_spaces(line);
        const std::uint64_t q = parse_decimal(fields[0], number);
        if (fields.size() - 1 != q)
            throw parse_error(line_at(number), "row declares " + std::to_string(q) +
                                                   " indices but lists " +
                                                   std::to_string(fields.size() - 1));
        std::vector<CycleIndex> indices(q);
        for (std::uint64_t j = 0; j < q; ++j)
            indices[j] = parse_decimal(fields[j + 1], number);
        if (const char* why = index_set_violation(t, indices))
            throw parse_error(line_at(number), why);
        rows.push_back(CycleIndexSet::trusted(t, std::move(indices)));
    }
    if (in.peek() != std::char_traits<char>::eof())
        throw parse_error(line_at(tau + 2), "trailing data after last row");
    return Portrait(mode, t, tau, std::move(rows));
}

// -------------------------------------------------------------- binary

void put_u64(std::string& out, std::uint64_t v) {
    for (unsigned i = 0; i < 8; ++i)
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
}

class BinaryReader {
public:
    explicit BinaryReader(std::istream& in, std::uint64_t offset = 0)
        : in_(in), offset_(offset) {}

    std::uint64_t offset() const noexcept { return offset_; }

    void read(char* dst, std::size_t n, const char* what) {
        in_.read(dst, static_cast<std::streamsize>(n));
        const auto got = static_cast<std::uint64_t>(in_.gcount());
        if (got != n)
            throw parse_error(byte_at(offset_ + got), std::string("truncated ") + what);
        offset_ += n;
    }

    std::uint8_t u8(const char* what) {
        char c;
        read(&c, 1, what);
        return static_cast<std::uint8_t>(c);
    }

    std::uint64_t u64(const char* what) {
        std::array<char, 8> buf;
        read(buf.data(), buf.size(), what);
        std::uint64_t v = 0;
        for (unsigned i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf[i])) << (8 * i);
        return v;
    }

    bool at_end() { return in_.peek() == std::char_traits<char>::eof(); }

private:
    std::istream& in_;
    std::uint64_t offset_;
};

Portrait read_binary_rest(BinaryReader& r) {
    const std::uint64_t mode_offset = r.offset();
    const std::uint8_t mode_byte = r.u8("mode");
    if (mode_byte > 1)
        throw parse_error(byte_at(mode_offset), "unknown mode byte " + std::to_string(mode_byte));
    const auto mode = static_cast<PortraitMode>(mode_byte);
    const std::uint64_t dims_offset = r.offset();
    const Dimension t = r.u64("dimension");
    const std::uint64_t tau = r.u64("row count");
    check_header_dims(t, tau, mode, byte_at(dims_offset));

    std::vector<CycleIndexSet> rows;
    rows.reserve(std::min(tau, reserve_cap));
    for (std::uint64_t i = 0; i < tau; ++i) {
        const std::uint64_t row_offset = r.offset();
        const std::uint64_t q = r.u64("row size");
        if (q > 2 * t)
            throw parse_error(byte_at(row_offset), "row size " + std::to_string(q) +
                                                       " exceeds 2t");
        std::vector<CycleIndex> indices;
        indices.reserve(std::min(q, reserve_cap));
        for (std::uint64_t j = 0; j < q; ++j)
            indices.push_back(r.u64("index"));
        if (const char* why = index_set_violation(t, indices))
            throw parse_error(byte_at(row_offset), why);
        rows.push_back(CycleIndexSet::trusted(t, std::move(indices)));
    }
    if (!r.at_end())
        throw parse_error(byte_at(r.offset()), "trailing data after last row");
    return Portrait(mode, t, tau, std::move(rows));
}

}  // namespace

void write_text(std::ostream& out, const Portrait& p) {
    std::string buf;
    buf.append(text_magic).push_back(' ');
    buf.append(to_string(p.mode())).push_back(' ');
    append_number(buf, p.dimension());
    buf.push_back(' ');
    append_number(buf, p.rows_count());
    buf.push_back('\n');
    for (const auto& row : p.rows()) {
        append_number(buf, row.size());
        for (auto k : row.indices()) {
            buf.push_back(' ');
            append_number(buf, k);
        }
        buf.push_back('\n');
        if (buf.size() >= reserve_cap) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out)
        throw io_error("write failure");
}

std::string to_text(const Portrait& p) {
    std::ostringstream out;
    write_text(out, p);
    return std::move(out).str();
}

Portrait read_text(std::istream& in) {
    std::string header;
    if (!next_line(in, header, 1))
        throw parse_error(line_at(1), "empty input");
    return read_text_rest(in, std::move(header));
}

Portrait parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_text(in);
}

void write_binary(std::ostream& out, const Portrait& p) {
    std::string buf;
    buf.append(binary_magic);
    buf.push_back(static_cast<char>(p.mode()));
    put_u64(buf, p.dimension());
    put_u64(buf, p.rows_count());
    for (const auto& row : p.rows()) {
        put_u64(buf, row.size());
        for (auto k : row.indices()) {
            put_u64(buf, k);
            if (buf.size() >= reserve_cap) {
                out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
                buf.clear();
            }
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out)
        throw io_error("write failure");
}

std::string to_binary(const Portrait& p) {
    std::ostringstream out;
    write_binary(out, p);
    return std::move(out).str();
}

Portrait read_binary(std::istream& in) {
    BinaryReader r(in);
    std::array<char, 4> magic;
    r.read(magic.data(), magic.size(), "magic");
    if (std::string_view(magic.data(), magic.size()) != binary_magic)
        throw parse_error(byte_at(0), "bad magic");
    return read_binary_rest(r);
}

Portrait parse_binary(std::string_view bytes) {
    std::istringstream in{std::string(bytes)};
    return read_binary(in);
}

std::optional<PortraitFormat> detect_format(std::string_view prefix) noexcept {
    if (prefix.substr(0, 4) == text_magic)
        return PortraitFormat::text;
    if (prefix.substr(0, 4) == binary_magic)
        return PortraitFormat::binary;
    return std::nullopt;
}

Portrait read_portrait(std::istream& in) {
    BinaryReader r(in);
    std::array<char, 4> magic;
    r.read(magic.data(), magic.size(), "magic");
    const std::string_view prefix(magic.data(), magic.size());
    const auto format = detect_format(prefix);
    if (!format)
        throw parse_error(byte_at(0), "unrecognized portrait magic");
    if (*format == PortraitFormat::binary)
        return read_binary_rest(r);
    std::string rest;
    if (!next_line(in, rest, 1))
        throw parse_error(line_at(1), "missing final newline");
    return read_text_rest(in, std::string(prefix) + rest);
}

void write_bit_matrix(std::ostream& out, const BitPlaneMatrix& m) {
    std::string line(m.columns() + 1, '\n');
    for (std::uint64_t i = 1; i <= m.rows_count(); ++i) {
        const auto row = m.row(i);
        for (std::size_t j = 0; j < row.size(); ++j)
            line[j] = static_cast<char>('0' + row[j]);
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
    if (!out)
        throw io_error("write failure");
}

BitPlaneMatrix read_bit_matrix(std::istream& in) {
    std::vector<std::uint8_t> bits;
    std::string line;
    std::uint64_t rows = 0;
    std::size_t width = 0;
    while (next_line(in, line, rows + 1)) {
        ++rows;
        if (rows == 1)
            width = line.size();
        else if (line.size() != width)
            throw parse_error(line_at(rows), "row length " + std::to_string(line.size()) +
                                                 " differs from " + std::to_string(width));
        for (char c : line) {
            if (c != '0' && c != '1')
                throw parse_error(line_at(rows), "matrix entries must be '0' or '1'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    if (rows == 0)
        throw parse_error(line_at(1), "empty matrix");
    if (width < min_dimension)
        throw parse_error(line_at(1), "matrix needs at least 3 columns");
    return BitPlaneMatrix(rows, width, std::move(bits));
}

}  // namespace scp
