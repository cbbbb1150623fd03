#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphtempo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the file name and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message);

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

/// Input that parses but violates a graph invariant (unknown node, value for
/// an absent node, edge without present endpoints, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Unknown node, edge, attribute or time label.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Interval outside the time domain or otherwise malformed.
class IntervalError : public Error {
 public:
  using Error::Error;
};

/// Caller passed arguments that the operation does not accept.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Request for functionality that is deliberately not provided (non-triangle
/// patterns, DIST rollups that are not distributive).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Materialized aggregate not present in the cache.
class CacheMissError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphtempo
