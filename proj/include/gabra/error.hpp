#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gabra {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input: bad group spec, non-prime p, non-modular
/// (group, p) pair, elements from different contexts.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A set would grow past the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t reached)
      : Error(what), reached_(reached) {}

  /// Cardinality that was reached (or would be reached) when the guard fired.
  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

/// Inversion requested for an element of augmentation other than 1.
class NotNormalizedUnit : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments violating its documented contract.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gabra
