#pragma once

#include <stdexcept>
#include <string>

namespace qlink {

/// Domain error tagged with the module that raised it. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("diagram", "line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Invalid diagram structure; slice is -1 when the problem is not local.
class DiagramError : public Error {
 public:
  DiagramError(int slice, const std::string& what)
      : Error("diagram", (slice >= 0 ? "slice " + std::to_string(slice) + ": " : std::string()) + what),
        slice_(slice),
        detail_(what) {}
  int slice() const noexcept { return slice_; }
  /// The message without the module and slice prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  int slice_;
  std::string detail_;
};

class AlgebraError : public Error {
 public:
  explicit AlgebraError(const std::string& what) : Error("oqa", what) {}
};

}  // namespace qlink
