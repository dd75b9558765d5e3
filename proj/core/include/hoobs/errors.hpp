#pragma once

#include <stdexcept>
#include <string>

namespace hoobs {

/// Malformed input: unknown names, bad parameters, schema violations.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction exceeded its configured state budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The label sequence is not in the observed language.
class NotGeneratedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural invariant of a construction was broken.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hoobs
