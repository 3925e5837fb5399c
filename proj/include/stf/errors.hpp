// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace stf {

// Exact search over eigenvalue partitions was capped; retry with a higher limit.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// An exact verification was requested on a matrix restored from a float format.
class InexactMatrixError : public std::runtime_error {
 public:
  explicit InexactMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// The given vector system does not span the space (rank-deficient synthesis matrix).
class NotAFrameError : public std::runtime_error {
 public:
  explicit NotAFrameError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. line/column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::string s = what + " (line " + std::to_string(line);
    if (column != 0) s += ", column " + std::to_string(column);
    return s + ")";
  }

  std::size_t line_;
  std::size_t column_;
};

// Filesystem-level failure (unreadable/unwritable path).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stf
