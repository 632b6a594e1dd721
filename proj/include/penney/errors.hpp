#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace penney {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDenominatorError : public Error {
public:
    ZeroDenominatorError() : Error("rational: zero denominator") {}
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(std::size_t column)
        : Error("matrix is singular: no nonzero pivot in column " + std::to_string(column)),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A pattern pair or coin that cannot form a game.
class InvalidGameError : public Error {
public:
    using Error::Error;
};

/// The chain has a transient state that never reaches an absorbing state.
class NonAbsorbingChainError : public Error {
public:
    using Error::Error;
};

/// A claimed property failed to hold when checked.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace penney
