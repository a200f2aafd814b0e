#pragma once

#include <stdexcept>
#include <string>

namespace lamlab {

// Base for every domain failure the library reports. The CLI maps these to
// exit code 2; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class CrossingError : public Error {
 public:
  using Error::Error;
};

class NotCriticalError : public Error {
 public:
  using Error::Error;
};

class AmbiguousBoundary : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace lamlab
