#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace gromov {

enum class ErrorKind {
  EmptyMatrix,
  NotSquare,
  AsymmetricEntry,
  NonzeroDiagonal,
  NegativeEntry,
  NonFiniteEntry,
  TriangleViolation,
  ZeroOffDiagonal,
  ProductBoundViolation,
  NonzeroBaseEntry,
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  NotZeroHyperbolic,
};

const char* to_string(ErrorKind kind);

/// Thrown when an input fails a structural or metric invariant.
/// Offending indices (up to three) are kept for programmatic access;
/// unused slots are -1.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ErrorKind kind, std::array<int, 3> indices, const std::string& message)
      : std::runtime_error(message), kind_(kind), indices_(indices) {}

  ErrorKind kind() const { return kind_; }
  const std::array<int, 3>& indices() const { return indices_; }

 private:
  ErrorKind kind_;
  std::array<int, 3> indices_;
};

[[noreturn]] void throw_validation_error(ErrorKind kind, int i = -1, int j = -1, int k = -1,
                                         const std::string& detail = "");

}  // namespace gromov
