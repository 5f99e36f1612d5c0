#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetcat {

enum class ErrorKind {
  InvalidGenerator,
  InvalidMap,
  Composition,
  AntisymmetryViolation,
  InvalidPoset,
  NotSplitMonoCandidate,
  WrongSubcategory,
  InvalidDiagram,
  InvalidCocone,
  InvalidSquare,
  IdentityViolation,
  Truncation,
  Protocol,
  InsufficientBound,
  NonStabilized,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGenerator: return "invalid-generator";
    case ErrorKind::InvalidMap: return "invalid-map";
    case ErrorKind::Composition: return "composition";
    case ErrorKind::AntisymmetryViolation: return "antisymmetry-violation";
    case ErrorKind::InvalidPoset: return "invalid-poset";
    case ErrorKind::NotSplitMonoCandidate: return "not-a-split-mono-candidate";
    case ErrorKind::WrongSubcategory: return "wrong-subcategory";
    case ErrorKind::InvalidDiagram: return "invalid-diagram";
    case ErrorKind::InvalidCocone: return "invalid-cocone";
    case ErrorKind::InvalidSquare: return "invalid-square";
    case ErrorKind::IdentityViolation: return "identity-violation";
    case ErrorKind::Truncation: return "truncation";
    case ErrorKind::Protocol: return "protocol";
    case ErrorKind::InsufficientBound: return "insufficient-bound";
    case ErrorKind::NonStabilized: return "non-stabilized";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace posetcat
