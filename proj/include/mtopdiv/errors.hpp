#pragma once

#include <stdexcept>
#include <string>

namespace mtd {

// Precondition violations on caller-supplied data.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed cloud files; the message carries the location.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an invariant that the algorithms guarantee does not hold.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mtd
