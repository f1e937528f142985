#include "gromov/errors.hpp"

#include <sstream>

namespace gromov {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyMatrix: return "empty matrix";
    case ErrorKind::NotSquare: return "not square";
    case ErrorKind::AsymmetricEntry: return "asymmetric entry";
    case ErrorKind::NonzeroDiagonal: return "nonzero diagonal";
    case ErrorKind::NegativeEntry: return "negative entry";
    case ErrorKind::NonFiniteEntry: return "non-finite entry";
    case ErrorKind::TriangleViolation: return "triangle inequality violation";
    case ErrorKind::ZeroOffDiagonal: return "zero off-diagonal entry";
    case ErrorKind::ProductBoundViolation: return "product exceeds diagonal bound";
    case ErrorKind::NonzeroBaseEntry: return "nonzero entry in basepoint row";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::SelfLoop: return "self loop";
    case ErrorKind::DuplicateEdge: return "duplicate edge";
    case ErrorKind::Disconnected: return "graph is not connected";
    case ErrorKind::NotZeroHyperbolic: return "input is not 0-hyperbolic";
  }
  return "unknown error";
}

void throw_validation_error(ErrorKind kind, int i, int j, int k, const std::string& detail) {
  std::ostringstream msg;
  msg << to_string(kind);
  if (i >= 0) {
    msg << " at (" << i;
    if (j >= 0) msg << "," << j;
    if (k >= 0) msg << "," << k;
    msg << ")";
  }
  if (!detail.empty()) msg << ": " << detail;
  throw ValidationError(kind, {i, j, k}, msg.str());
}

}  // namespace gromov
