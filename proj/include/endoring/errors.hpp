#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace endoring {

/// Malformed polynomial text. `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operands live over different rings or different ambient free modules.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The homogeneous engine was handed an inhomogeneous element.
class InhomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Something that must be impossible happened (failed lift, missing identity).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace endoring
