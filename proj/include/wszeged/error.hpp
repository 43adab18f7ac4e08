#pragma once

#include <stdexcept>
#include <string>

namespace wsz {

// Base of every error raised by the core library. The C API maps each
// subclass onto a distinct status code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

// Configured size or enumeration cap exceeded.
class LimitError : public Error {
public:
  using Error::Error;
};

} // namespace wsz
