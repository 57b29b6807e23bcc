#pragma once

#include <stdexcept>
#include <string>

namespace rsq {

// Malformed file / bad CLI value. Message carries a location ("components[2].reality: ...").
struct InputError : std::runtime_error {
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

// Well-formed input outside an operation's domain (precondition failure, underflow, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

// A consistency check that should hold for every input failed; a bug, not user error.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace rsq
