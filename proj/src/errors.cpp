#include "qhborel/errors.hpp"

namespace qhb {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Schema: return "SchemaError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::Cycle: return "CycleError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Shape: return "ShapeError";
    case ErrorCode::NotUnitriangular: return "NotUnitriangular";
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NonPositiveK: return "NonPositiveK";
    case ErrorCode::Divisibility: return "DivisibilityError";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotATree: return "NotATree";
  }
  return "Error";
}

}  // namespace qhb
