#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cen {

/// Raised when a caller breaks an operation's precondition
/// (bad endpoint, input length mismatch, wrong element kind, ...).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// DSL syntax or validation failure, located by byte offset into the source.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// An enumeration would exceed a configured order cap.
class LimitExceeded : public std::runtime_error {
public:
  LimitExceeded(const std::string& what, int cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  int cap() const noexcept { return cap_; }

private:
  int cap_;
};

} // namespace cen
