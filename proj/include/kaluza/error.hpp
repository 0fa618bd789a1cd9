#pragma once

#include <stdexcept>
#include <string>

namespace kaluza {

// Malformed or out-of-contract input (bad fraction, mismatched tables, failed precondition).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a word table would exceed the configured storage guard.
class GuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace kaluza
