#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kstar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position` is a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownAtomError : public Error {
public:
    explicit UnknownAtomError(const std::string& atom)
        : Error("unknown atom '" + atom + "'"), atom_(atom) {}

    const std::string& atom() const noexcept { return atom_; }

private:
    std::string atom_;
};

/// The requested computation does not fit the exhaustive domain limits.
class DomainTooLargeError : public Error {
public:
    using Error::Error;
};

/// Malformed rank file, signature, or other structured input.
class FormatError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A search that is guaranteed to succeed came back empty.
class ExhaustionError : public Error {
public:
    using Error::Error;
};

} // namespace kstar
