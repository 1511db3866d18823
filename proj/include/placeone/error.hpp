#pragma once

#include <stdexcept>
#include <string>

namespace placeone {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The user input is malformed or violates a standing hypothesis
/// (non-reduced curve, failed degree condition where it is required, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with the offending character position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : InputError(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// A configured guardrail (tower depth, tower degree, oracle cap, ...) was hit.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold by theory failed: this is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace placeone
