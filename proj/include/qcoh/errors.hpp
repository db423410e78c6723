#ifndef QCOH_ERRORS_HPP
#define QCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatch between operands (non-square matrix, wrong vector length, ...).
struct DimensionError : Error {
    using Error::Error;
};

// Caller passed a value outside an operation's domain.
struct InvalidInputError : Error {
    using Error::Error;
};

// A ring/quantum specification violates one of its structural invariants.
struct InvalidSpecError : Error {
    using Error::Error;
};

// Unknown catalog id.
struct NotFoundError : Error {
    using Error::Error;
};

// Document could not be parsed at all.
struct ParseError : Error {
    using Error::Error;
};

// Document parsed but does not match the schema.
struct SchemaError : Error {
    using Error::Error;
};

// Document matched the schema but failed semantic validation.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace qcoh

#endif
