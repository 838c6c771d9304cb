#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgp {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Header/column problems: duplicate names, unknown columns, missing header.
struct SchemaError : Error {
    using Error::Error;
};

// A malformed data row; carries the 1-based line number.
struct RowError : Error {
    std::size_t line;
    RowError(const std::string& msg, std::size_t line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// A cell that cannot hold the value it was given (non-finite numeric etc).
struct ValueError : Error {
    using Error::Error;
};

// Bad user-supplied configuration: fractions out of range, missing files, bad keys.
struct ConfigError : Error {
    using Error::Error;
};

// Size preconditions: sampling more rows than exist, empty point sets.
struct SizeError : Error {
    using Error::Error;
};

// Expression or document syntax error; carries the byte offset into the input.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " at byte " + std::to_string(byte_offset)), offset(byte_offset) {}
};

// Expression evaluation failure: unbound variable, division by zero, domain error.
struct EvalError : Error {
    using Error::Error;
};

// Unknown name in a registry.
struct LookupError : Error {
    using Error::Error;
};

// Knowledge spec invariant violations.
struct SpecError : Error {
    using Error::Error;
};

// Generation backend failures (transport, exhausted retries, replay miss).
struct BackendError : Error {
    using Error::Error;
};

// A metric was asked to aggregate over an empty region.
struct RegionEmptyError : Error {
    using Error::Error;
};

}  // namespace kgp
