#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xfs {

enum class ErrorKind {
  OrderTooSmall,
  MissingEdge,
  DuplicateEdge,
  NonFiniteWeight,
  SelfLoop,
  VertexOutOfRange,
  NonFiniteScale,
  SyntaxError,
  BadRange,
  NotAPermutation,
  TooShort,
  VertexAlreadyPresent,
  EnumerationCapExceeded,
  SameEdge,
  DegenerateAdjacentPair,
  OrderMismatch,
  FactorialOverflow,
  NoComplementCycles,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NonFiniteScale: return "NonFiniteScale";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::VertexAlreadyPresent: return "VertexAlreadyPresent";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::SameEdge: return "SameEdge";
    case ErrorKind::DegenerateAdjacentPair: return "DegenerateAdjacentPair";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::FactorialOverflow: return "FactorialOverflow";
    case ErrorKind::NoComplementCycles: return "NoComplementCycles";
  }
  return "Unknown";
}

/// Domain error raised by every module. The kind is stable and is what the
/// CLI reports; the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

/// Parse failure with the 1-based line number of the offending line
/// (0 when the problem is not tied to a line, e.g. an empty file).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& detail)
      : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + detail), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace xfs
