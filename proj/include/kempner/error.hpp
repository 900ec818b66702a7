#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kempner {

// Base of every error raised by the library for inputs outside an
// operation's domain. Internal invariant violations use std::logic_error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A result or intermediate product does not fit the supported width.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Zero was supplied where the domain is Z \ {0} or N*.
class ZeroError : public Error {
public:
    using Error::Error;
};

// A base that must be prime is not.
class NotPrimeError : public Error {
public:
    using Error::Error;
};

class NotDivisibleError : public Error {
public:
    using Error::Error;
};

// An exhaustive search or scan would exceed its configured limit.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Any other argument outside the operation's precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace kempner
