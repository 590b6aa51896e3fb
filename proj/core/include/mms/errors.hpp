#pragma once

#include <stdexcept>
#include <string>

namespace mms {

/// Malformed input files or option strings.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid inputs that do not fit together (wrong space, size
/// mismatch, unequal masses where equality is required).
struct MismatchError : std::runtime_error {
  explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mms
