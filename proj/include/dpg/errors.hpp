#pragma once

#include <stdexcept>
#include <string>

namespace dpg {

// Raised when an exhaustive computation would exceed its configured budget
// (agent cap for the exact oracle, grid-point cap for stability search).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by instance-document parsing; the message carries field context.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dpg
