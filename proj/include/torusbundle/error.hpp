// error.hpp — error hierarchy shared by the library and the CLI.
#pragma once

#include <stdexcept>
#include <string>

namespace torusbundle {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input data that is structurally invalid: unparsable scalars, wrong
// dimensions, non-integer or non-alternating form components.
// CLI exit code 2.
class MalformedInputError : public Error {
public:
    explicit MalformedInputError(const std::string& what) : Error(what) {}
};

// Well-formed input outside an operation's domain: a subspace meeting its
// conjugate, a compatibility relation that fails, an unsupported size.
// CLI exit code 3.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A period subspace whose basis is fine but which fails the open condition
// of being complementary to its conjugate.
class DegenerateStructureError : public PreconditionError {
public:
    explicit DegenerateStructureError(const std::string& what) : PreconditionError(what) {}
};

} // namespace torusbundle
