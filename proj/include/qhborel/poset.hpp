#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qhb {

/// Human-written description of a finite poset. `relations` are generating
/// pairs (a, b) meaning a <= b; they need not be transitively closed and
/// reflexive pairs are ignored.
struct PosetSpec {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> relations;
};

struct PosetStats {
  std::size_t height = 0;             // cardinality of a longest chain
  std::vector<std::size_t> minimal;   // indices, ascending
  bool is_tree = false;               // every principal down-set is a chain
};

/// Finite partial order on label positions 0..size()-1.
///
/// Holds the reflexive-transitive closure, the immediate predecessors of
/// every element and a linear extension that breaks ties by input order.
/// Immutable once built.
class Poset {
 public:
  static Poset build(const PosetSpec& spec);

  /// Antichain or chain on the given labels (chain follows label order).
  static Poset antichain(std::vector<std::string> labels);
  static Poset chain(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Position of `label`; throws Error(UnknownLabel).
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t a, std::size_t b) const noexcept {
    return leq_[a * labels_.size() + b] != 0;
  }
  bool lt(std::size_t a, std::size_t b) const noexcept {
    return a != b && leq(a, b);
  }
  bool comparable(std::size_t a, std::size_t b) const noexcept {
    return leq(a, b) || leq(b, a);
  }

  /// Maximal elements strictly below i, ascending by position.
  const std::vector<std::size_t>& immediate_predecessors(std::size_t i) const {
    return ipred_.at(i);
  }
  std::vector<std::string> immediate_predecessors(std::string_view label) const;

  bool is_immediate_predecessor(std::size_t j, std::size_t i) const;

  /// Permutation of positions: j placed before i whenever j < i.
  const std::vector<std::size_t>& linear_extension() const noexcept {
    return linext_;
  }

  PosetStats stats() const;

  /// Same labels, order reversed.
  Poset opposite() const;

  /// Every strict pair (a, b) of the closure, as a spec. Rebuilding from it
  /// yields an identical poset.
  PosetSpec closure_spec() const;

  bool operator==(const Poset& other) const = default;

 private:
  Poset(std::vector<std::string> labels, std::vector<unsigned char> leq);

  std::vector<std::string> labels_;
  std::vector<unsigned char> leq_;  // row-major, leq_[a*n+b] = (a <= b)
  std::vector<std::vector<std::size_t>> ipred_;
  std::vector<std::size_t> linext_;
};

}  // namespace qhb
