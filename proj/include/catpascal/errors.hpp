#pragma once

#include <stdexcept>
#include <string>

namespace catpascal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graph, family or algebra specification.
struct InvalidSpec : Error {
  using Error::Error;
};

// An operation was applied outside its domain (bad edge, illegal
// decoration, size mismatch, ...).
struct DomainError : Error {
  using Error::Error;
};

struct CorruptFamily : Error {
  using Error::Error;
};

struct IncompatibleFamilies : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace catpascal
