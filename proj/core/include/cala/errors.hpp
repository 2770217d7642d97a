#pragma once

#include <stdexcept>
#include <string>

namespace cala {

// Base for everything the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input (scalar grammar, documents). `where` is a position
// or JSON-pointer style location when one is known.
struct ParseError : Error {
    std::string where;
    ParseError(const std::string& msg, std::string where_ = {})
        : Error(where_.empty() ? msg : msg + " at " + where_), where(std::move(where_)) {}
};

// A mathematical precondition failed (dimension mismatch, non-associative
// input, singular transport matrix, ...).
struct MathError : Error {
    using Error::Error;
};

// A documented enumeration limit was exceeded (grid/search bounds).
struct LimitError : Error {
    using Error::Error;
};

}  // namespace cala
