#include "canondeg/error.hpp"

namespace canondeg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::WindowTooLarge: return "WindowTooLarge";
    case ErrorKind::IsFullMonoid: return "IsFullMonoid";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::GorensteinCase: return "GorensteinCase";
    case ErrorKind::NotThreeGenerated: return "NotThreeGenerated";
    case ErrorKind::DegenerateSign: return "DegenerateSign";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
  }
  return "Unknown";
}

}  // namespace canondeg
