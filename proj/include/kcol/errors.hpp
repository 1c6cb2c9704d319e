#pragma once

#include <stdexcept>
#include <string>

namespace kcol {

// Malformed input or a violated precondition of a public operation.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A hard size limit (oracle bounds, enumeration caps, retry caps) was hit.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The existence condition of a constructive lemma fails for this input.
// This is a legitimate negative answer, not a malformed request.
class condition_unmet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal guarantee broke. Always a bug in this library.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kcol
