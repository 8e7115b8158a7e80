#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scp {

// Base of every error the library throws for bad input.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A dimension, cycle index or coordinate outside its admissible range.
class range_error : public error {
public:
    using error::error;
};

// A dimension too small for the hypercube model (t < 3) or mismatched operands.
class dimension_error : public error {
public:
    using error::error;
};

// A streaming session fed the wrong number of coordinates.
class protocol_error : public error {
public:
    using error::error;
};

// An index set that does not recompose to a sign vector, or breaks a
// CycleIndexSet invariant.
class invalid_portrait : public error {
public:
    using error::error;
};

// A portrait whose mode or shape cannot be decoded to bytes.
class format_error : public error {
public:
    using error::error;
};

// A serialized portrait that failed to parse. `where()` is "line N" for
// the text format and "byte N" for the binary format.
class parse_error : public error {
public:
    parse_error(std::string where, const std::string& what)
        : error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

// File or stream failure.
class io_error : public error {
public:
    using error::error;
};

// The brute-force oracle found the decomposition not unique or not minimal.
// Never expected; signals a broken invariant rather than bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace scp
