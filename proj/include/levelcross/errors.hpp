#pragma once

#include <stdexcept>
#include <string>

namespace levelcross {

// Bad caller-supplied data (CLI exit code 1).
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized document; carries the first offending position.
class SchemaError : public InvalidInputError {
public:
    explicit SchemaError(const std::string& what) : InvalidInputError(what) {}
};

// A guaranteed-by-theorem condition failed at runtime. This is never a data
// problem: it means a bug in the connectivity or coloring code (CLI exit code 2).
class TheoremViolationError : public std::logic_error {
public:
    explicit TheoremViolationError(const std::string& what) : std::logic_error(what) {}
};

class InfeasibleEnumerationError : public std::runtime_error {
public:
    explicit InfeasibleEnumerationError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedDimensionError : public InvalidInputError {
public:
    explicit UnsupportedDimensionError(const std::string& what) : InvalidInputError(what) {}
};

namespace detail {
// Internal consistency check that must hold by proof; failure is a coding bug.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw TheoremViolationError(std::string("internal invariant failed: ") + what);
}
}  // namespace detail

}  // namespace levelcross
