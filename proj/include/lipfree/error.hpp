#pragma once

#include <stdexcept>
#include <string>

namespace lipfree {

enum class ErrorKind {
  ParseError,
  DuplicatePoint,
  NonzeroDiagonal,
  AsymmetricMatrix,
  NegativeOrZeroOffDiagonal,
  TriangleViolation,
  SamePoint,
  EpsOutOfRange,
  BadProfile,
  SingletonSpace,
  IndexOutOfRange,
  UnknownPoint,
  SpaceMismatch,
  BaseNotInSubset,
  NontrivialSegment,
  NormViolation,
  PreconditionNotMet,
  InvariantViolated,
};

const char* to_string(ErrorKind kind);

// Structured failure: the violated rule plus witness indices where they
// exist. TriangleViolation(i,j,k) means d(i,j) > d(i,k) + d(k,j).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int i = -1, int j = -1,
        int k = -1);

  ErrorKind kind() const noexcept { return kind_; }
  int witness_i() const noexcept { return i_; }
  int witness_j() const noexcept { return j_; }
  int witness_k() const noexcept { return k_; }

 private:
  ErrorKind kind_;
  int i_, j_, k_;
};

}  // namespace lipfree
