#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhb {

enum class ErrorCode {
  Schema,            // malformed JSON input, wrong types, unknown keys
  UnknownLabel,      // relation endpoint or query label not in the poset
  Cycle,             // generating relations close to a non-antisymmetric relation
  DimensionMismatch, // matrix or vector extents disagree with the label count
  Shape,             // exact linear algebra operands do not conform
  NotUnitriangular,
  InvalidData,       // engine called on data that fails validate()
  NotRealizable,     // recursion produced a value no quasihereditary algebra allows
  NonPositiveK,
  Divisibility,
  InvalidSpec,
  NotATree,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the Borel profile when dim L_j^B does not divide
/// dim Hom(Delta_j, Delta_i). Indices are positions in the label list.
class DivisibilityError : public Error {
 public:
  DivisibilityError(std::size_t i, std::size_t j, const std::string& what)
      : Error(ErrorCode::Divisibility, what), i_(i), j_(j) {}

  std::size_t row() const noexcept { return i_; }
  std::size_t column() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

}  // namespace qhb
