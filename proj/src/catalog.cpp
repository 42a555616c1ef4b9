#include "qhborel/catalog.hpp"

#include <string>

#include "qhborel/errors.hpp"

namespace qhb {

namespace {

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

QhData blank(Poset poset) {
  const std::size_t n = poset.size();
  return QhData{std::move(poset), IntMat(n, n), IntMat(n, n), IntMat::identity(n), IntVec(n, 1)};
}

// Path algebra of 1 -> 2 <- 3 -> 4, natural order. Projectives (standard
// part in brackets):
//   P1 = [1] / 2     P2 = [2]     P3 = [3 / 2] + 4     P4 = [4]
QhData example_a4() {
  QhData d = blank(Poset::chain(numbered_labels(4)));
  for (std::size_t i = 0; i < 4; ++i) d.delta(i, i) = d.nabla(i, i) = 1;
  d.delta(2, 1) = 1;  // Delta_3 = 3 / 2
  d.nabla(1, 0) = 1;  // (P1 : Delta_2) = 1
  d.nabla(3, 2) = 1;  // (P3 : Delta_4) = 1
  d.hom(1, 2) = 1;    // Delta_2 = L_2 is the socle of Delta_3
  return d;
}

QhData semisimple(std::size_t n, bool chain) {
  auto labels = numbered_labels(n);
  QhData d = blank(chain ? Poset::chain(std::move(labels)) : Poset::antichain(std::move(labels)));
  d.delta = d.nabla = IntMat::identity(n);
  return d;
}

// Quiver 1 <-> 2 <-> ... <-> n with alpha_{i+1} alpha_i = beta_i beta_{i+1} = 0,
// alpha_i beta_i = beta_{i+1} alpha_{i+1} and alpha_{n-1} beta_{n-1} = 0:
//   P1 = [1] / 2 / 1
//   Pi = [i / i-1] then i+1, with socle i            (1 < i < n)
//   Pn = [n / n-1]
// so Delta_i = i / i-1, Nabla_i likewise, (P_i : Delta_{i+1}) = 1, and the
// only map between distinct standards is Delta_{i-1} -> soc Delta_i.
QhData erdmann(std::size_t n) {
  QhData d = blank(Poset::chain(numbered_labels(n)));
  for (std::size_t i = 0; i < n; ++i) {
    d.delta(i, i) = d.nabla(i, i) = 1;
    if (i > 0) {
      d.delta(i, i - 1) = d.nabla(i, i - 1) = 1;
      d.hom(i - 1, i) = 1;
    }
  }
  return d;
}

// Same quiver with only alpha_i beta_i = 0: standards are uniserial with
// Delta_i = i / i-1 / ... / 1, costandards dually, and every Delta_j
// (j <= i) embeds into Delta_i as its radical power, one-dimensionally.
QhData dual_extension_linear(std::size_t n) {
  QhData d = blank(Poset::chain(numbered_labels(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      d.delta(i, j) = d.nabla(i, j) = 1;
      d.hom(j, i) = 1;
    }
  return d;
}

// Ringel dual of the dual extension A of a tree, quasihereditary for the
// opposite order. With t(k, j) = (T_k : Delta_j) = (T_k : Nabla_j):
//   [Delta'_j : L'_k] = (Q'_k : Nabla'_j) = (T_k : Delta_j)
//   [Nabla'_j : L'_k] = (P'_k : Delta'_j) = (T_k : Nabla_j)
//   dim Hom(Delta'_a, Delta'_b) = dim Hom_A(Nabla_a, Nabla_b) = [b <= a]
QhData ringel_dual_tree(const PosetSpec& spec) {
  const Poset tree = Poset::build(spec);
  const IntMat t = tilting_delta_multiplicities(tree).t;
  QhData d = blank(tree.opposite());
  const std::size_t n = tree.size();
  d.delta = d.nabla = t.transposed();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.hom(a, b) = tree.leq(b, a) ? 1 : 0;
  return d;
}

}  // namespace

Family family_from_name(std::string_view name) {
  for (Family f : {Family::ExampleA4, Family::Semisimple, Family::Erdmann,
                   Family::DualExtensionLinear, Family::RingelDualTree})
    if (name == family_name(f)) return f;
  throw Error(ErrorCode::InvalidSpec, "unknown family '" + std::string(name) +
                                          "' (expected example_a4, semisimple, erdmann, "
                                          "dual_extension_linear or ringel_dual_tree)");
}

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::ExampleA4: return "example_a4";
    case Family::Semisimple: return "semisimple";
    case Family::Erdmann: return "erdmann";
    case Family::DualExtensionLinear: return "dual_extension_linear";
    case Family::RingelDualTree: return "ringel_dual_tree";
  }
  return "?";
}

QhData generate(const FamilySpec& spec) {
  if (spec.family != Family::ExampleA4 && spec.family != Family::RingelDualTree && spec.n == 0)
    throw Error(ErrorCode::InvalidSpec, "family size must be at least 1");
  switch (spec.family) {
    case Family::ExampleA4: return example_a4();
    case Family::Semisimple: return semisimple(spec.n, spec.chain);
    case Family::Erdmann: return erdmann(spec.n);
    case Family::DualExtensionLinear: return dual_extension_linear(spec.n);
    case Family::RingelDualTree:
      if (!spec.tree) throw Error(ErrorCode::InvalidSpec, "ringel_dual_tree needs a tree");
      return ringel_dual_tree(*spec.tree);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

TiltingMultiplicities tilting_delta_multiplicities(const Poset& tree) {
  if (!tree.stats().is_tree)
    throw Error(ErrorCode::NotATree, "poset is not a tree: some down-set is not a chain");
  const std::size_t n = tree.size();
  IntMat t(n, n);
  for (std::size_t k : tree.linear_extension()) {
    t(k, k) = 1;
    for (std::size_t l = 0; l < n; ++l) {
      if (!tree.lt(l, k)) continue;
      for (std::size_t j = 0; j < n; ++j) t(k, j) += t(l, j);
    }
  }
  return {std::move(t)};
}

QhData morita_twist(const QhData& data, std::span<const Int> k, const EngineOptions& opts) {
  QhData out = data;
  out.simple_dims = representative_multiplicities(data, k, opts);
  return out;
}

PosetSpec random_tree(std::size_t n, std::mt19937_64& rng) {
  PosetSpec spec{numbered_labels(n), {}};
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    spec.relations.emplace_back(spec.labels[pick(rng)], spec.labels[i]);
  }
  return spec;
}

}  // namespace qhb
