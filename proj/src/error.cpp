#include "lipfree/error.hpp"

namespace lipfree {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorKind::NegativeOrZeroOffDiagonal: return "NegativeOrZeroOffDiagonal";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::SamePoint: return "SamePoint";
    case ErrorKind::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorKind::BadProfile: return "BadProfile";
    case ErrorKind::SingletonSpace: return "SingletonSpace";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::BaseNotInSubset: return "BaseNotInSubset";
    case ErrorKind::NontrivialSegment: return "NontrivialSegment";
    case ErrorKind::NormViolation: return "NormViolation";
    case ErrorKind::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, int i, int j, int k)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      i_(i),
      j_(j),
      k_(k) {}

}  // namespace lipfree
