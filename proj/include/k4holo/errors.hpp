#ifndef K4HOLO_ERRORS_HPP
#define K4HOLO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace k4holo {

// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Unsupported root-system family or rank.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

// Caller violated an operation's precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Input is well-formed but outside what the engine handles.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

// Generated data failed a structural check (e.g. a group expected to be
// elementary abelian has an element of order > 2).
class ValidationError : public Error {
public:
  using Error::Error;
};

// A state that correct inputs can never reach. Firing means a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

// Fixed-subsystem pattern with no entry in the real-form table.
class UnmappedPatternError : public Error {
public:
  explicit UnmappedPatternError(std::string pattern)
      : Error("unmapped real-form pattern: " + pattern), pattern_(std::move(pattern)) {}
  const std::string& pattern() const noexcept { return pattern_; }

private:
  std::string pattern_;
};

// Computed result disagrees with the embedded reference data.
class VerificationError : public Error {
public:
  using Error::Error;
};

} // namespace k4holo

#endif
