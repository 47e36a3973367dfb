#pragma once

#include <stdexcept>
#include <string>

namespace tc {

enum class ErrorKind {
  Parse,
  NotPrefixClosed,
  NotAVertex,
  NotALeaf,
  TooSmall,
  NotLaminar,
  WrongCardinality,
  PivotMissing,
  NotEdgeDisjoint,
  SubtreeTooSmall,
  LengthMismatch,
  ImproperColoring,
  ZeroRoot,
  ZeroEntry,
  TooShort,
  DimensionTooLarge,
  Disconnected,
  NotAVineColoring,
  NoMatch,
  TooLarge,
  OutOfRange,
  BoundExceeded,
  Overflow,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, long index = -1)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind),
        index_(index) {}

  ErrorKind kind() const { return kind_; }
  // Position of the failing symbol for PivotMissing raised by path evaluation.
  long index() const { return index_; }

 private:
  ErrorKind kind_;
  long index_;
};

}  // namespace tc
