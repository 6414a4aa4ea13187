#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbr {

// Thrown when two morphisms are chained but the middle objects disagree.
class EndpointMismatch : public std::runtime_error {
public:
    EndpointMismatch(std::string expected, std::string actual)
        : std::runtime_error("endpoint mismatch: expected " + expected + ", got " + actual),
          expected_(std::move(expected)),
          actual_(std::move(actual)) {}

    const std::string& expected() const noexcept { return expected_; }
    const std::string& actual() const noexcept { return actual_; }

private:
    std::string expected_;
    std::string actual_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("at offset " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A token parsed fine syntactically but names a generator outside the
// legality table (bad object, bad direction, bad crossing position).
class IllegalGenerator : public ParseError {
public:
    using ParseError::ParseError;
};

// Internal consistency failures. These indicate implementation bugs or a
// broken convention constant, never bad user input.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ConventionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gbr
