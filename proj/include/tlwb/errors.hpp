#pragma once

#include <stdexcept>
#include <string>

namespace tlwb {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: word files, formula files, interval syntax.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t where)
      : Error(what + " (at offset " + std::to_string(where) + ")"),
        offset(where) {}
  explicit ParseError(const std::string& what) : Error(what), offset(0) {}
  std::size_t offset;
};

// Structurally valid data used outside its domain: position out of range,
// membership query on a word that does not start at time zero, empty
// interval, and similar contract violations.
struct DomainError : Error {
  using Error::Error;
};

// An exhaustive computation grew past its configured resource bound. The
// caller can treat the instance as "too large" rather than as wrong.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace tlwb
