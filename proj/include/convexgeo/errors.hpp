#pragma once

#include <stdexcept>
#include <string>

namespace convexgeo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown tokens, bad files, invalid tables.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the closure system does not hold (not standard,
/// D-cycles present, not a convex geometry, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponential enumeration was requested on a ground set larger than
/// the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::size_t ground_size, std::size_t cap)
      : Error(what + ": ground set has " + std::to_string(ground_size) +
              " elements, cap is " + std::to_string(cap) +
              " (raise it with --cap)"),
        ground_size_(ground_size),
        cap_(cap) {}

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t ground_size_;
  std::size_t cap_;
};

/// A result failed an internal self-check. Indicates a bug or a violated
/// theoretical assumption, never bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace convexgeo
