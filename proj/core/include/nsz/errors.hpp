#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsz {

/// Malformed object: out-of-range variable, contradictory literal where one
/// is not allowed, a weakening that does not divide its product, ...
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside the supported range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text or JSON input could not be parsed.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cooperative deadline expired inside a long-running solve.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate fails an identity it was required to satisfy.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, std::uint64_t witness) : std::runtime_error(what), witness_(witness) {}
  /// Packed assignment where the identity fails.
  [[nodiscard]] std::uint64_t witness() const noexcept { return witness_; }

 private:
  std::uint64_t witness_;
};

}  // namespace nsz
