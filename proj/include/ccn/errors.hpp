#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccn {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph6 or edge-list input; carries the byte offset of the
// first offending byte.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// No closed form applies and the instance exceeds the oracle cap.
// Carries the best lower bound established before giving up.
class UndecidedError : public Error {
public:
    UndecidedError(const std::string& what, int lower_bound)
        : Error(what), lower_bound_(lower_bound) {}

    int lower_bound() const noexcept { return lower_bound_; }

private:
    int lower_bound_;
};

}  // namespace ccn
