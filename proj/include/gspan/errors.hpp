#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gspan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: a zero cyclic order, a subset that is not a subgroup, ...
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class GroupMismatchError : public Error {
 public:
  using Error::Error;
};

// A structure failed an axiom check; the message names the witness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& what, std::size_t requested, std::size_t limit)
      : Error(what + ": " + std::to_string(requested) + " exceeds the size guard " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

}  // namespace gspan
