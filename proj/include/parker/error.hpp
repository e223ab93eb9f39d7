#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parker {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad dessin text, degree mismatch,
/// element outside the group, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in dessin text; `position` is a 0-based byte offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configured size cap was exceeded.
class SizeError : public Error {
 public:
  SizeError(std::string cap, std::size_t limit, std::size_t reached)
      : Error(cap + " exceeded: limit " + std::to_string(limit) + ", reached " +
              std::to_string(reached)),
        cap_(std::move(cap)),
        limit_(limit),
        reached_(reached) {}

  const std::string& cap() const { return cap_; }
  std::size_t limit() const { return limit_; }
  /// Count reached when the cap tripped (partial count for group closure).
  std::size_t reached() const { return reached_; }

 private:
  std::string cap_;
  std::size_t limit_;
  std::size_t reached_;
};

/// An internal consistency check failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Some eigenvalue of the Parker element does not lie in Q(zeta_N),
/// N the group exponent. Kept distinct because it would contradict the
/// splitting-field containment the whole analysis relies on.
class EigenvalueFieldError : public Error {
 public:
  using Error::Error;
};

}  // namespace parker
