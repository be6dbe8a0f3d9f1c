#ifndef FLATSPEC_ERROR_HPP_
#define FLATSPEC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace flatspec {

// Base for everything the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (dimension mismatch, p > n, ...).
struct RangeError : Error {
  using Error::Error;
};

// A configured cap (shell norm, holonomy order, family size) was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

// Input does not describe a valid group, array or graph.
struct ValidationError : Error {
  using Error::Error;
};

// An exactness assertion failed inside a computation. Always a bug in the
// model or the input data, never a rounding issue.
struct IntegrityError : Error {
  using Error::Error;
};

[[noreturn]] inline void fail_range(const std::string& msg) { throw RangeError(msg); }
[[noreturn]] inline void fail_validation(const std::string& msg) { throw ValidationError(msg); }

}  // namespace flatspec

#endif  // FLATSPEC_ERROR_HPP_
