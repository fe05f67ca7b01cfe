#include "frontier/error.hpp"

namespace frontier {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::io: return "io";
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::lookup: return "lookup";
    case ErrorKind::domain: return "domain";
    case ErrorKind::solver: return "solver";
  }
  return "unknown";
}

const char* to_string(ParseErrorCode code) noexcept {
  switch (code) {
    case ParseErrorCode::empty_input: return "empty-input";
    case ParseErrorCode::bad_header: return "bad-header";
    case ParseErrorCode::missing_prefix: return "missing-prefix";
    case ParseErrorCode::missing_role: return "missing-role";
    case ParseErrorCode::duplicate_column: return "duplicate-column";
    case ParseErrorCode::ragged_row: return "ragged-row";
    case ParseErrorCode::empty_key: return "empty-key";
    case ParseErrorCode::non_numeric: return "non-numeric";
    case ParseErrorCode::non_finite: return "non-finite";
    case ParseErrorCode::negative_value: return "negative-value";
    case ParseErrorCode::duplicate_key: return "duplicate-key";
  }
  return "unknown";
}

namespace {

std::string format_parse_message(ParseErrorCode code, std::size_t line,
                                 std::size_t column, const std::string& detail) {
  std::string msg = to_string(code);
  if (line != 0) {
    msg += " at line " + std::to_string(line);
    if (column != 0) msg += ", column " + std::to_string(column);
  }
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

ParseError::ParseError(ParseErrorCode code, std::size_t line, std::size_t column,
                       const std::string& detail)
    : Error(ErrorKind::parse, format_parse_message(code, line, column, detail)),
      code_(code),
      line_(line),
      column_(column) {}

}  // namespace frontier
