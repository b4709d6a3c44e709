#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace efpe {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside its documented range (round count, digit count, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A string that is not a valid even-length decimal block.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A half-block value outside [0, 10^m).
class DomainError : public Error {
 public:
  using Error::Error;
};

class MalformedKey : public Error {
 public:
  MalformedKey(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  /// Offending character offset, or the input length for length errors.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EntropyError : public Error {
 public:
  using Error::Error;
};

/// Malformed KAT file. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace efpe
