#pragma once

#include <stdexcept>
#include <string>

namespace reeder {

// Base of every exception the library throws. The C API maps each subclass
// onto one status code, so new subclasses must be added there too.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed diagram: self-loop, duplicate edge, endpoint out of range, ...
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Text input (DSL, family string, range) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Family parameter outside its documented range.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// State space or nullspace too large for the configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operation called on a diagram or labeling it is not defined for.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Vertex or class index out of range, labeling of the wrong length.
class IndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace reeder
