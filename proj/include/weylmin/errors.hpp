#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylmin {

/// Malformed expression or document. Carries the byte offset into the
/// source when one is known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t pos = npos)
      : std::runtime_error(pos == npos ? what : what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// A rational function in Lambda has no rational primitive.
class NotIntegrableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is valid but the requested construction leaves the exact symbolic
/// scope (non-polynomial primitives, hbar in a denominator, missing primitives).
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weylmin
