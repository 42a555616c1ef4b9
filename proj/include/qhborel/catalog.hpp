#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "qhborel/engine.hpp"
#include "qhborel/model.hpp"
#include "qhborel/poset.hpp"

namespace qhb {

enum class Family {
  ExampleA4,            // path algebra of 1 -> 2 <- 3 -> 4
  Semisimple,           // all standard and costandard modules simple
  Erdmann,              // finite-type blocks of Schur algebras
  DualExtensionLinear,  // dual extension of the linear A_n quiver
  RingelDualTree,       // Ringel dual of the dual extension of a tree
};

/// Throws Error(InvalidSpec) for an unknown name.
Family family_from_name(std::string_view name);
const char* family_name(Family f) noexcept;

struct FamilySpec {
  Family family = Family::ExampleA4;
  std::size_t n = 1;              // ignored by ExampleA4 and RingelDualTree
  bool chain = false;             // Semisimple only: chain instead of antichain
  std::optional<PosetSpec> tree;  // RingelDualTree only
};

/// Throws Error(InvalidSpec) for n == 0 or a missing tree and
/// Error(NotATree) when the tree has a non-chain down-set.
QhData generate(const FamilySpec& spec);

/// t(k, j) = (T_k : Delta_j) for the dual extension of a tree, from
///   t(k, j) = [j == k] + sum_{l < k} t(l, j).
/// The same numbers give (T_k : Nabla_j) since the dual extension has a
/// simple preserving duality.
struct TiltingMultiplicities {
  IntMat t;
};

/// Throws Error(NotATree).
TiltingMultiplicities tilting_delta_multiplicities(const Poset& tree);

/// Same class, simple dimensions replaced by V k: the representative whose
/// regular exact Borel subalgebra has simple dimensions k.
QhData morita_twist(const QhData& data, std::span<const Int> k, const EngineOptions& opts = {});

/// Rooted tree on labels "1".."n": node i > 1 attaches below a uniformly
/// chosen earlier node.
PosetSpec random_tree(std::size_t n, std::mt19937_64& rng);

}  // namespace qhb
