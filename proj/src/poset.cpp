#include "qhborel/poset.hpp"

#include <algorithm>
#include <unordered_map>

#include "qhborel/errors.hpp"

namespace qhb {

namespace {

std::unordered_map<std::string_view, std::size_t> index_labels(
    const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(ErrorCode::InvalidSpec, "poset has no labels");
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorCode::InvalidSpec, "duplicate label '" + labels[i] + "'");
  }
  return index;
}

}  // namespace

Poset::Poset(std::vector<std::string> labels, std::vector<unsigned char> relation)
    : labels_(std::move(labels)), leq_(std::move(relation)) {
  const std::size_t n = labels_.size();

  // Warshall closure; reflexive by construction.
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq(a, b) && leq(b, a))
        throw Error(ErrorCode::Cycle, "order relation has a cycle through '" +
                                          labels_[a] + "' and '" + labels_[b] + "'");

  ipred_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt(j, i)) continue;
      bool maximal = true;
      for (std::size_t m = 0; m < n && maximal; ++m)
        if (lt(j, m) && lt(m, i)) maximal = false;
      if (maximal) ipred_[i].push_back(j);
    }
  }

  // Kahn's algorithm, always taking the lowest available input position.
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lt(j, i)) ++pending[i];
  std::vector<bool> placed(n, false);
  linext_.reserve(n);
  while (linext_.size() < n) {
    std::size_t next = 0;
    while (placed[next] || pending[next] != 0) ++next;
    placed[next] = true;
    linext_.push_back(next);
    for (std::size_t i = 0; i < n; ++i)
      if (lt(next, i)) --pending[i];
  }
}

Poset Poset::build(const PosetSpec& spec) {
  const auto index = index_labels(spec.labels);
  const std::size_t n = spec.labels.size();
  std::vector<unsigned char> leq(n * n, 0);
  for (const auto& [a, b] : spec.relations) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      throw Error(ErrorCode::UnknownLabel, "relation uses unknown label '" + a + "'");
    if (ib == index.end())
      throw Error(ErrorCode::UnknownLabel, "relation uses unknown label '" + b + "'");
    leq[ia->second * n + ib->second] = 1;
  }
  return Poset(spec.labels, std::move(leq));
}

Poset Poset::antichain(std::vector<std::string> labels) {
  index_labels(labels);
  const std::size_t n = labels.size();
  return Poset(std::move(labels), std::vector<unsigned char>(n * n, 0));
}

Poset Poset::chain(std::vector<std::string> labels) {
  index_labels(labels);
  const std::size_t n = labels.size();
  std::vector<unsigned char> leq(n * n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) leq[i * n + i + 1] = 1;
  return Poset(std::move(labels), std::move(leq));
}

std::size_t Poset::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw Error(ErrorCode::UnknownLabel, "unknown label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::string> Poset::immediate_predecessors(std::string_view label) const {
  std::vector<std::string> out;
  for (std::size_t j : ipred_[index_of(label)]) out.push_back(labels_[j]);
  return out;
}

bool Poset::is_immediate_predecessor(std::size_t j, std::size_t i) const {
  const auto& preds = ipred_.at(i);
  return std::binary_search(preds.begin(), preds.end(), j);
}

PosetStats Poset::stats() const {
  const std::size_t n = size();
  PosetStats s;
  std::vector<std::size_t> longest(n, 1);
  for (std::size_t i : linext_) {
    for (std::size_t j = 0; j < n; ++j)
      if (lt(j, i)) longest[i] = std::max(longest[i], longest[j] + 1);
    s.height = std::max(s.height, longest[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ipred_[i].empty()) s.minimal.push_back(i);

  s.is_tree = true;
  for (std::size_t i = 0; i < n && s.is_tree; ++i)
    for (std::size_t a = 0; a < n && s.is_tree; ++a)
      for (std::size_t b = a + 1; b < n && s.is_tree; ++b)
        if (leq(a, i) && leq(b, i) && !comparable(a, b)) s.is_tree = false;
  return s;
}

Poset Poset::opposite() const {
  const std::size_t n = size();
  std::vector<unsigned char> flipped(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flipped[b * n + a] = leq_[a * n + b];
  return Poset(labels_, std::move(flipped));
}

PosetSpec Poset::closure_spec() const {
  PosetSpec spec{labels_, {}};
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (lt(a, b)) spec.relations.emplace_back(labels_[a], labels_[b]);
  return spec;
}

}  // namespace qhb
