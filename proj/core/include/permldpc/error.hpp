#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permldpc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two permutations (or a permutation and a matrix) on different domains.
class DomainSizeError : public Error {
 public:
  using Error::Error;
};

// Cycle notation with a repeated or out-of-range symbol.
class MalformedCyclesError : public Error {
 public:
  using Error::Error;
};

// Exponent or coefficient set that cannot be used where it was passed,
// e.g. missing 0 or collapsing elements after reduction.
class MalformedSetError : public Error {
 public:
  using Error::Error;
};

class ModulusMismatchError : public Error {
 public:
  using Error::Error;
};

class BlockIndexError : public Error {
 public:
  using Error::Error;
};

class InvalidPathError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A theorem-level predicate was asked about a matrix it does not cover.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        detail_(what),
        line_(line),
        column_(column) {}

  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace permldpc
