#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dskit {

using VertexId = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex ids, unbalanced colorings, bad generator params.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A face or exponent that does not belong to the object it was used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The face lattice would exceed the configured face cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A verifier or classifier precondition does not hold. Carries the face
/// (as external vertex ids) that witnesses the failure, when there is one.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& message,
                    std::optional<std::vector<VertexId>> witness = std::nullopt)
      : Error(message), witness_(std::move(witness)) {}

  const std::optional<std::vector<VertexId>>& witness() const { return witness_; }

 private:
  std::optional<std::vector<VertexId>> witness_;
};

}  // namespace dskit
