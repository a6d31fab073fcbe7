#pragma once

#include <stdexcept>
#include <string>

namespace hypell {

// Every throwing site picks the most specific class below, so callers and
// tests can tell contract violations apart from genuine bugs.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input has the wrong shape (not a polynomial over Q, malformed divisor, ...).
struct type_error : error {
    using error::error;
};

// Value is outside the mathematical domain of the operation (zero polynomial
// where nonzero is required, even prime, t hitting a branch point, ...).
struct domain_error : error {
    using error::error;
};

// Caller broke a documented precondition that we can detect cheaply.
struct precondition_error : error {
    using error::error;
};

// Request exceeds the supported desk-scale envelope (degree, genus, field
// size). The computation is refused, never silently truncated.
struct capability_error : error {
    using error::error;
};

// A prime with bad reduction was passed where good reduction is required.
struct bad_reduction_error : domain_error {
    using domain_error::domain_error;
};

// An internal cross-check failed. Indicates a bug in this library, not in
// the caller; the message carries both conflicting values.
struct internal_error : error {
    using error::error;
};

// A hypothesis of the coset-avoidance lemma does not hold; the message names
// the offending index i.
struct hypothesis_error : error {
    using error::error;
};

// Parse failures, network failures, cache corruption.
struct io_error : error {
    using error::error;
};

} // namespace hypell
