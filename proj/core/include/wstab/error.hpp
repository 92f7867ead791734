#pragma once

#include <stdexcept>
#include <string>

namespace wstab {

/// Malformed or out-of-contract input (bad file line, violated precondition).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant did not hold. Seeing one of these is a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wstab
