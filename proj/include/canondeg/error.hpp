#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace canondeg {

enum class ErrorKind {
  EmptyGenerators,
  InvalidGenerator,
  GcdNotOne,
  WindowTooLarge,
  IsFullMonoid,
  BaseMismatch,
  NotContained,
  InternalMismatch,
  GorensteinCase,
  NotThreeGenerated,
  DegenerateSign,
  PreconditionUnmet,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; callers switch on kind().
class SemigroupError : public std::runtime_error {
 public:
  SemigroupError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace canondeg
