#pragma once

#include <random>
#include <string>
#include <vector>

#include "qhborel/catalog.hpp"
#include "qhborel/engine.hpp"
#include "qhborel/model.hpp"
#include "oracle.hpp"

namespace testing_support {

inline qhb::IntMat mat(const std::vector<std::vector<long>>& rows) {
  std::vector<qhb::IntVec> r;
  for (const auto& row : rows) {
    qhb::IntVec v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return qhb::IntMat::from_rows(r);
}

inline qhb::IntVec vec(const std::vector<long>& xs) {
  qhb::IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline qhb::IntVec ones(std::size_t n) { return qhb::IntVec(n, 1); }

inline qhb::QhData family(qhb::Family f, std::size_t n = 1) {
  qhb::FamilySpec spec;
  spec.family = f;
  spec.n = n;
  return qhb::generate(spec);
}

inline qhb::QhData ringel_dual(const qhb::PosetSpec& tree) {
  qhb::FamilySpec spec;
  spec.family = qhb::Family::RingelDualTree;
  spec.tree = tree;
  return qhb::generate(spec);
}

inline oracle::Mat to_oracle(const qhb::IntMat& m) { return oracle::to_mat(m); }
inline oracle::Vec to_oracle(const qhb::IntVec& v) { return oracle::to_vec(v); }

// Every catalog instance with size parameter up to max_n.
inline std::vector<qhb::QhData> catalog_instances(std::size_t max_n, std::uint64_t seed = 7) {
  std::vector<qhb::QhData> out{family(qhb::Family::ExampleA4)};
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.push_back(family(qhb::Family::Semisimple, n));
    qhb::FamilySpec chain{qhb::Family::Semisimple, n, true, std::nullopt};
    out.push_back(qhb::generate(chain));
    out.push_back(family(qhb::Family::Erdmann, n));
    out.push_back(family(qhb::Family::DualExtensionLinear, n));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(ringel_dual(qhb::random_tree(n, rng)));
  return out;
}

inline qhb::IntVec random_k(std::size_t n, std::mt19937_64& rng, long max = 9) {
  std::uniform_int_distribution<long> pick(1, max);
  qhb::IntVec k;
  for (std::size_t i = 0; i < n; ++i) k.emplace_back(pick(rng));
  return k;
}

// Random poset of height at most two with data satisfying every validation
// rule. With hom_equals_delta, hom matches delta on covering pairs as it does
// for genuine algebras; otherwise hom is any value up to the delta bound.
inline qhb::QhData random_height_two(std::mt19937_64& rng, bool hom_equals_delta,
                                     std::size_t max_n = 8) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  const std::size_t n = size(rng);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<long> mult(0, 3);
  qhb::PosetSpec spec;
  for (std::size_t i = 0; i < n; ++i) spec.labels.push_back("x" + std::to_string(i));
  std::vector<bool> bottom(n);
  for (std::size_t i = 0; i < n; ++i) bottom[i] = coin(rng);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (bottom[a] && !bottom[b] && coin(rng)) spec.relations.emplace_back(spec.labels[a], spec.labels[b]);
  qhb::Poset p = qhb::Poset::build(spec);
  qhb::QhData d{p, qhb::IntMat(n, n), qhb::IntMat(n, n), qhb::IntMat::identity(n), qhb::IntVec(n)};
  std::uniform_int_distribution<long> dim(1, 5);
  for (std::size_t i = 0; i < n; ++i) {
    d.delta(i, i) = d.nabla(i, i) = 1;
    d.simple_dims[i] = dim(rng);
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.lt(j, i)) continue;
      d.delta(i, j) = mult(rng);
      d.nabla(i, j) = mult(rng);
      if (hom_equals_delta) {
        d.hom(j, i) = d.delta(i, j);
      } else {
        std::uniform_int_distribution<long> bound(0, d.delta(i, j).get_si());
        d.hom(j, i) = bound(rng);
      }
    }
  }
  return d;
}

}  // namespace testing_support
