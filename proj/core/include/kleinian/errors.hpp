#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kleinian {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated mathematical precondition: division by zero, singular matrix,
// non-parabolic input to a fixed-point query, invalid family index, ...
struct DomainError : Error {
    using Error::Error;
};

// Lexical/syntactic failure while reading a word, element or config.
// `position` is a 0-based offset into the input text.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A word referenced a generator that the active namespace does not define.
struct UnknownName : Error {
    std::string name;
    explicit UnknownName(const std::string& n) : Error("unknown name '" + n + "'"), name(n) {}
};

}  // namespace kleinian
