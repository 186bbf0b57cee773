#pragma once

#include <stdexcept>
#include <string>

namespace rb {

// Caller broke a documented precondition (dimension/field/algebra mismatch,
// operating on an unverified module, missing hypothesis flag, ...).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// A construction invariant failed (non-associative structure constants,
// broken unit law, underlying module axioms do not hold).
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// Malformed input document. `location` is a human-readable position hint.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::string location = "")
        : std::runtime_error(location.empty() ? what : what + " (at " + location + ")"),
          location_(std::move(location)) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

// A tensor word grew past its truncation bound. Never silent.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rb
