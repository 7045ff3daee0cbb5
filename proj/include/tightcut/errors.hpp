#pragma once

#include <stdexcept>
#include <string>

namespace tightcut {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidShoreError : public Error {
 public:
  using Error::Error;
};

class UnknownEdgeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Enumeration refused because the instance exceeds the configured guard.
class GuardExceededError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// JSON input that does not follow the certificate schema. what() starts
// with the JSON path of the offending value.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what) : Error(path + ": " + what), path_(path) {}
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A result that the theory guarantees could not be produced or failed its
// own verification. Always a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tightcut
