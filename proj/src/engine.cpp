#include "qhborel/engine.hpp"

#include <stdexcept>
#include <string>

#include "qhborel/errors.hpp"

namespace qhb {

namespace {

enum class Form { Full, Pruned };

// Coefficients c_k with v_i = e_i + sum_k c_k v_k, for either form of the
// recursion:
//   c_k = sum_{k <= j < i} nabla(j,k) hom(j,i)  -  [k < i] delta(i,k)
// The pruned form drops every k that is an immediate predecessor of i.
IntVec recursion_coefficients(const QhData& d, std::size_t i, Form form) {
  const Poset& p = d.poset;
  const std::size_t n = p.size();
  IntVec c(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!p.lt(j, i)) continue;
    const Int& h = d.hom(j, i);
    if (sgn(h) != 0)
      for (std::size_t k = 0; k < n; ++k) {
        if (!p.leq(k, j)) continue;
        if (form == Form::Pruned && p.is_immediate_predecessor(k, i)) continue;
        if (sgn(d.nabla(j, k)) != 0) c[k] += d.nabla(j, k) * h;
      }
    if (form == Form::Pruned && p.is_immediate_predecessor(j, i)) continue;
    c[j] -= d.delta(i, j);
  }
  return c;
}

IntMat run_vector_recursion(const QhData& d, Form form) {
  const std::size_t n = d.size();
  IntMat v(n, n);
  for (std::size_t i : d.poset.linear_extension()) {
    const IntVec c = recursion_coefficients(d, i, form);
    v(i, i) = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(c[k]) == 0) continue;
      for (std::size_t t = 0; t < n; ++t)
        if (sgn(v(k, t)) != 0) v(i, t) += c[k] * v(k, t);
    }
  }
  return v;
}

IntVec run_length_recursion(const QhData& d, Form form) {
  const std::size_t n = d.size();
  IntVec l(n);
  for (std::size_t i : d.poset.linear_extension()) {
    const IntVec c = recursion_coefficients(d, i, form);
    l[i] = 1;
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(c[k]) != 0) l[i] += c[k] * l[k];
  }
  return l;
}

std::string pair_name(const Poset& p, std::size_t i, std::size_t j) {
  return "(" + p.label(i) + "," + p.label(j) + ")";
}

[[noreturn]] void report_form_mismatch(const QhData& d, std::size_t i) {
  const Poset& p = d.poset;
  for (std::size_t j : p.immediate_predecessors(i))
    if (d.hom(j, i) != d.delta(i, j))
      throw Error(ErrorCode::NotRealizable,
                  "full and pruned recursions disagree at " + p.label(i) + ": dim Hom(Delta_" +
                      p.label(j) + ", Delta_" + p.label(i) + ") = " + d.hom(j, i).get_str() +
                      " but [Delta_" + p.label(i) + " : L_" + p.label(j) + "] = " +
                      d.delta(i, j).get_str() + " for the immediate predecessor " + p.label(j));
  throw Error(ErrorCode::NotRealizable, "full and pruned recursions disagree at " + p.label(i));
}

void require_positive(std::span<const Int> k, std::size_t n) {
  if (k.size() != n)
    throw Error(ErrorCode::Shape, "k has " + std::to_string(k.size()) + " entries, expected " +
                                      std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (k[i] < 1)
      throw Error(ErrorCode::NonPositiveK,
                  "k[" + std::to_string(i) + "] = " + k[i].get_str() + " is not positive");
}

}  // namespace

VMatrix compute_V(const QhData& data, const EngineOptions& opts) {
  require_valid(data);
  const Poset& p = data.poset;
  const std::size_t n = data.size();
  IntMat v = run_vector_recursion(data, Form::Pruned);

  if (opts.cross_check) {
    const IntMat full = run_vector_recursion(data, Form::Full);
    for (std::size_t i = 0; i < n; ++i)
      if (full.row(i) != v.row(i)) report_form_mismatch(data, i);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v(i, j)) < 0)
        throw Error(ErrorCode::NotRealizable,
                    "v" + pair_name(p, i, j) + " = " + v(i, j).get_str() + " is negative");
      if (sgn(v(i, j)) > 0 && p.is_immediate_predecessor(j, i))
        throw Error(ErrorCode::NotRealizable,
                    "v" + pair_name(p, i, j) + " = " + v(i, j).get_str() +
                        " is nonzero at an immediate predecessor");
    }
  return {std::move(v)};
}

LSequence compute_l(const QhData& data, const EngineOptions& opts) {
  const VMatrix vm = compute_V(data, opts);
  IntVec l = run_length_recursion(data, Form::Pruned);
  const IntVec sums = vm.v.row_sums();
  if (opts.cross_check && run_length_recursion(data, Form::Full) != l)
    throw std::logic_error("length recursion: full and pruned forms disagree");
  if (l != sums) throw std::logic_error("length recursion disagrees with the row sums of V");
  for (const auto& x : l)
    if (x < 1) throw std::logic_error("length recursion produced a nonpositive length");
  return {std::move(l)};
}

BorelVerdict borel_existence(const QhData& data, const EngineOptions& opts) {
  const VMatrix vm = compute_V(data, opts);
  RatVec x = unitriangular_solve(vm.v, data.simple_dims, data.poset.linear_extension());

  NotGood bad{std::move(x), {}};
  for (std::size_t i = 0; i < bad.witness.size(); ++i)
    if (!is_integral(bad.witness[i]) || bad.witness[i] < 1) bad.failing.push_back(i);
  if (!bad.failing.empty()) return bad;

  Good good;
  for (const auto& q : bad.witness) good.k.push_back(Int(q.get_num()));
  return good;
}

IntVec representative_multiplicities(const QhData& data, std::span<const Int> k,
                                     const EngineOptions& opts) {
  require_positive(k, data.size());
  return matvec_exact(compute_V(data, opts).v, k);
}

BorelProfile borel_profile(const QhData& data, std::span<const Int> k, const EngineOptions& opts) {
  require_positive(k, data.size());
  const Poset& p = data.poset;
  const std::size_t n = data.size();
  const IntMat v = compute_V(data, opts).v;
  const IntVec l = v.row_sums();
  const FiltrationMatrices f = filtration_matrices(data);

  BorelProfile out;
  out.cartan_bop = matmul_exact(data.nabla, v);
  out.cartan_b = out.cartan_bop.transposed();

  out.len_q.assign(n, 0);
  out.len_p.assign(n, 0);
  const IntVec delta_lengths = f.f_delta.row_sums();  // l_Delta(P_k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(j, i)) out.len_q[i] += data.nabla(i, j) * l[j];
      if (p.leq(i, j)) out.len_p[i] += delta_lengths[j] * v(j, i);
    }

  out.dim_q = matvec_exact(out.cartan_bop, k);
  out.dim_p = matvec_exact(out.cartan_b, k);
  Int via_p = 0;
  out.dim_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.dim_b += out.dim_q[i] * k[i];
    via_p += out.dim_p[i] * k[i];
  }
  if (via_p != out.dim_b) throw std::logic_error("dim B differs between P and Q sides");

  out.n_table = IntMat(n, n);
  out.dim_w = out.dim_b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.lt(j, i) || sgn(data.hom(j, i)) == 0) continue;
      if (!mpz_divisible_p(data.hom(j, i).get_mpz_t(), k[j].get_mpz_t()))
        throw DivisibilityError(i, j,
                                "k[" + p.label(j) + "] = " + k[j].get_str() +
                                    " does not divide dim Hom(Delta_" + p.label(j) + ", Delta_" +
                                    p.label(i) + ") = " + data.hom(j, i).get_str() +
                                    "; no regular exact Borel subalgebra has these simple "
                                    "dimensions");
      out.n_table(i, j) = data.hom(j, i) / k[j];
      out.dim_w += out.n_table(i, j) * out.dim_p[i] * out.dim_q[j];
    }
  return out;
}

ClassFlags class_flags(const QhData& data, const EngineOptions& opts) {
  const VMatrix vm = compute_V(data, opts);
  const IntVec l = compute_l(data, opts).l;

  ClassFlags f;
  f.all_good = true;
  for (const auto& x : l)
    if (x != 1) f.all_good = false;
  f.v_is_identity = vm.v.is_identity();
  f.minimal_good_here = (data.simple_dims == l);
  f.height_shortcut = data.poset.stats().height <= 2;

  if (f.all_good != f.v_is_identity)
    throw std::logic_error("l == 1 and V == identity must coincide");
  if (f.height_shortcut && !f.v_is_identity)
    throw std::logic_error("height <= 2 must force V == identity");
  return f;
}

}  // namespace qhb
