#pragma once

#include <stdexcept>
#include <string>

namespace hychroma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (bad length, odd d, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// An exhaustive operation would exceed its size limit and `force` was not set.
class GuardError : public Error {
public:
    explicit GuardError(const std::string& what)
        : Error("exhaustive limit: " + what) {}
};

/// A construction's input failed a verified precondition.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug or corrupted input.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// Malformed file or text input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hychroma
