#pragma once

#include <stdexcept>
#include <string>

namespace winf {

// Bad arguments supplied by a caller (malformed partition, size mismatch, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation not allowed in the object's current state (double normalization, ...).
class invalid_state : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A library invariant was found broken at run time. Never expected to fire.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
    if(!cond) {
        throw invariant_error(what);
    }
}

} // namespace winf
