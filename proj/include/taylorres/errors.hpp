#pragma once

#include <stdexcept>
#include <string>

namespace taylorres {

/// Input exceeds a documented size envelope (CLI exit code 3).
class EnvelopeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed monomial/ideal text (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  /// 0-based character offset into the input text.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace taylorres
