#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontoforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File or network access failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Caller supplied a value outside an operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed text in one of the supported file formats. Line and column are
/// 1-based; zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that uses a construct this implementation does not handle.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace ontoforge
