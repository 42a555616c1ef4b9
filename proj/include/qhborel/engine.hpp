#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "qhborel/exactla.hpp"
#include "qhborel/model.hpp"

namespace qhb {

struct EngineOptions {
  /// Evaluate the unpruned recursion as well and require it to agree with
  /// the pruned one. The two differ by sum over immediate predecessors j of
  /// (hom(j,i) - delta(i,j)) v_j, so a mismatch means the data cannot come
  /// from a quasihereditary algebra.
  bool cross_check = true;
};

/// Composition multiplicities [Res(L_i) : L_j^B] of restricted simples over a
/// regular exact Borel subalgebra. Row i is v_i, indexed like the labels.
struct VMatrix {
  IntMat v;
};

/// l[i] = length of the restricted simple Res(L_i).
struct LSequence {
  IntVec l;
};

struct Good {
  IntVec k;  // dim L_i^B
};

struct NotGood {
  RatVec witness;                       // unique solution of V x = simple_dims
  std::vector<std::size_t> failing;     // positions that are not integers >= 1
};

using BorelVerdict = std::variant<Good, NotGood>;

struct BorelProfile {
  IntMat cartan_bop;  // [Q_i^B : L_j^B]
  IntMat cartan_b;    // transpose of cartan_bop
  IntVec len_q;
  IntVec len_p;
  IntVec dim_q;
  IntVec dim_p;
  Int dim_b;
  IntMat n_table;     // n_table(i, j) = hom(j, i) / k[j] for j < i, zero elsewhere
  Int dim_w;
};

struct ClassFlags {
  bool all_good = false;           // every algebra in the class has a regular exact Borel
  bool v_is_identity = false;
  bool minimal_good_here = false;  // the given algebra has a basic regular exact Borel
  bool height_shortcut = false;    // poset height <= 2
};

/// Runs the recursion for v_i along the linear extension of the poset.
/// Throws Error(InvalidData) if validate() fails and Error(NotRealizable)
/// if an entry is negative, an immediate predecessor has a nonzero entry,
/// or the two forms of the recursion disagree.
VMatrix compute_V(const QhData& data, const EngineOptions& opts = {});

/// Direct scalar recursion for l, checked against the row sums of V.
LSequence compute_l(const QhData& data, const EngineOptions& opts = {});

/// Decides whether the given algebra has a regular exact Borel subalgebra by
/// solving V x = simple_dims exactly.
BorelVerdict borel_existence(const QhData& data, const EngineOptions& opts = {});

/// m = V k: simple dimensions of the representative End(+ P_i^{m_i})^op that
/// carries a regular exact Borel subalgebra with simple dimensions k.
IntVec representative_multiplicities(const QhData& data, std::span<const Int> k,
                                     const EngineOptions& opts = {});

/// Cartan data, lengths and dimensions of a regular exact Borel subalgebra
/// with simple dimensions k, together with dim B and dim W of the associated
/// directed bocs. Throws DivisibilityError when k[j] does not divide a
/// nonzero hom(j, i).
BorelProfile borel_profile(const QhData& data, std::span<const Int> k,
                           const EngineOptions& opts = {});

ClassFlags class_flags(const QhData& data, const EngineOptions& opts = {});

}  // namespace qhb
