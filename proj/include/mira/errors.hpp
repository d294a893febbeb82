#pragma once

#include <stdexcept>
#include <string>

namespace mira {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MismatchedPrimes : Error {
    using Error::Error;
};

struct IndeterminateValuation : Error {
    using Error::Error;
};

struct InsufficientPrecision : Error {
    using Error::Error;
};

struct PoleAtSample : Error {
    using Error::Error;
};

struct UnboundedSupport : Error {
    using Error::Error;
};

struct DegreeBoundExceeded : Error {
    using Error::Error;
};

// Internal consistency failures (tail stabilization, certificate checks).
struct InternalCheckFailure : Error {
    using Error::Error;
};

}  // namespace mira
