#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frontier {

/// Broad error families. The CLI maps these onto exit codes.
enum class ErrorKind {
  usage,       // bad flags / command line
  io,          // file cannot be opened or written
  parse,       // malformed CSV
  validation,  // structurally invalid data or arguments
  lookup,      // unknown DMU or period
  domain,      // data outside the model's domain (e.g. zero inputs)
  solver,      // internal invariant violated inside a model
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

class LookupError : public Error {
 public:
  explicit LookupError(const std::string& what) : Error(ErrorKind::lookup, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

/// A model produced a state that valid input cannot produce.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorKind::solver, what) {}
};

/// What went wrong while reading a panel CSV.
enum class ParseErrorCode {
  empty_input,
  bad_header,
  missing_prefix,
  missing_role,
  duplicate_column,
  ragged_row,
  empty_key,
  non_numeric,
  non_finite,
  negative_value,
  duplicate_key,
};

const char* to_string(ParseErrorCode code) noexcept;

class ParseError : public Error {
 public:
  /// `line` and `column` are 1-based; 0 means "not applicable".
  ParseError(ParseErrorCode code, std::size_t line, std::size_t column,
             const std::string& detail);

  ParseErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorCode code_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace frontier
