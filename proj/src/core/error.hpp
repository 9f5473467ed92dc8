#pragma once

#include <stdexcept>
#include <string>

namespace ckcoh {

enum class ErrorKind {
  InvalidArgument,
  IndexOutOfRange,
  LengthMismatch,
  InvalidAlgebra,
  NotCocycle,
  ConstraintViolation,
  RelationMismatch,
  Parse,
};

// Every failure raised by the library carries a kind so the C layer can map
// it onto a stable status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ckcoh
