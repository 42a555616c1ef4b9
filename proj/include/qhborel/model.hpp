#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qhborel/exactla.hpp"
#include "qhborel/poset.hpp"

namespace qhb {

/// Equivalence-class data of a quasihereditary algebra.
///
/// All matrices are indexed by position in `poset.labels()`:
///   delta(i, j) = [Delta_i : L_j]   (row = standard module, column = simple)
///   nabla(i, j) = [Nabla_i : L_j]
///   hom(j, i)   = dim Hom(Delta_j, Delta_i)   (row = source)
///   simple_dims[i] = dim L_i
struct QhData {
  Poset poset;
  IntMat delta;
  IntMat nabla;
  IntMat hom;
  IntVec simple_dims;

  std::size_t size() const noexcept { return poset.size(); }
  bool operator==(const QhData& other) const = default;
};

/// One failed data invariant. `indices` are label positions in the order the
/// matrix is addressed (row, column); empty for whole-record issues.
struct Violation {
  std::string invariant;
  std::string field;
  std::vector<std::size_t> indices;
  Int value;
  std::string message;
};

/// Checks every invariant and collects all failures. An empty result means
/// the record is usable by the engine. Throws Error(DimensionMismatch) when a
/// matrix or the dimension vector does not match the label count.
std::vector<Violation> validate(const QhData& data);

/// Throws Error(InvalidData) naming the first violation, if any.
void require_valid(const QhData& data);

struct FiltrationMatrices {
  IntMat f_delta;  // f_delta(k, j) = (P_k : Delta_j)
  IntMat f_nabla;  // f_nabla(k, j) = (Q_k : Nabla_j)
};

/// BGG reciprocity: (P_k : Delta_j) = [Nabla_j : L_k] and
/// (Q_k : Nabla_j) = [Delta_j : L_k].
FiltrationMatrices filtration_matrices(const QhData& data);

/// Reads the JSON input format
///   { "labels", "order", "delta", "nabla", "hom", "simple_dims" }.
/// Integers may be JSON integers or decimal strings. Throws Error(Schema),
/// Error(DimensionMismatch), Error(UnknownLabel), Error(Cycle) or
/// Error(InvalidSpec).
QhData parse_qhdata(std::string_view text);

/// Inverse of parse_qhdata. `order` lists the covering relations.
std::string dump_qhdata(const QhData& data, int indent = 2);

}  // namespace qhb
