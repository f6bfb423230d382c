#pragma once

#include <stdexcept>
#include <string>

namespace fga {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Operands belong to different fields or different ambient free groups.
class mismatch_error : public error {
public:
  explicit mismatch_error(const std::string &msg) : error(msg) {}
};

/// A stated precondition of an operation was violated by the arguments.
class precondition_error : public error {
public:
  explicit precondition_error(const std::string &msg) : error(msg) {}
};

/// A configurable resource bound (iteration cap, enumeration budget) was hit.
class budget_error : public error {
public:
  explicit budget_error(const std::string &msg) : error(msg) {}
};

/// Malformed textual input.
class parse_error : public error {
public:
  parse_error(const std::string &msg, std::size_t position)
      : error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

} // namespace fga
