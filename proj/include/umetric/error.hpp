#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace umetric {

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (topology, route, parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A topology invariant was violated. Carries the offending link id when
/// the violation is attributable to one link.
class ValidationError : public InputError {
 public:
  explicit ValidationError(const std::string& what,
                           std::optional<std::string> link_id = std::nullopt)
      : InputError(what), link_id_(std::move(link_id)) {}

  const std::optional<std::string>& link_id() const noexcept { return link_id_; }

 private:
  std::optional<std::string> link_id_;
};

/// Argument outside the mathematical domain of a metric formula.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// Topology file syntax or content error, tagged with a 1-based line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnreachableError : public Error {
 public:
  using Error::Error;
};

/// Path enumeration hit its cap. partial_count is how many paths had been
/// collected when the cap was crossed.
class PathCapExceeded : public Error {
 public:
  PathCapExceeded(std::size_t partial_count, std::size_t cap)
      : Error("path cap exceeded: more than " + std::to_string(cap) +
              " candidate paths (collected " + std::to_string(partial_count) + ")"),
        partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

}  // namespace umetric
