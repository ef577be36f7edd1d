#pragma once

#include <stdexcept>
#include <string>

namespace lpack {

/// A parameter lies outside the range an operation is defined on
/// (order too small, (k, x) out of range, unknown label, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The circuit instances (x, n) = (1, 4) and (1, 6) admit no k-placement.
class ExcludedInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// k copies cannot fit in the host, or an exhaustive search found no placement.
class CapacityViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input that does not parse against the certificate schema.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lpack
