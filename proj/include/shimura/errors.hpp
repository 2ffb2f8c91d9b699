#pragma once

#include <stdexcept>
#include <string>

namespace shimura {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition of an operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

// An internal algebraic identity failed (e.g. a division assumed exact was not).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// A claimed mathematical statement did not reproduce. Carries both sides.
class VerificationFailure : public Error {
public:
    VerificationFailure(const std::string& what, std::string expected, std::string actual)
        : Error(what + " (expected: " + expected + ", actual: " + actual + ")"),
          expected_(std::move(expected)),
          actual_(std::move(actual)) {}

    const std::string& expected() const noexcept { return expected_; }
    const std::string& actual() const noexcept { return actual_; }

private:
    std::string expected_;
    std::string actual_;
};

} // namespace shimura
