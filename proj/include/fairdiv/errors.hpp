#ifndef FAIRDIV_ERRORS_HPP_
#define FAIRDIV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fairdiv {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: unknown labels, bad JSON, out-of-range arguments.
struct InputError : Error {
    using Error::Error;
};

// A size cap or enumeration budget was exceeded.
struct CapacityError : Error {
    using Error::Error;
};

// A valuation failed a matroid axiom, or a rule table is defective.
struct ValidationError : Error {
    using Error::Error;
};

// A documented caller contract was broken (e.g. redundant allocation).
struct PreconditionError : Error {
    using Error::Error;
};

// The operation does not support this valuation family.
struct UnsupportedKindError : Error {
    using Error::Error;
};

}  // namespace fairdiv

#endif  // FAIRDIV_ERRORS_HPP_
