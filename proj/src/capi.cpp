#include "qhborel/qhborel.h"

#include <cstring>
#include <exception>
#include <random>
#include <set>
#include <string>

#include "qhborel/catalog.hpp"
#include "qhborel/engine.hpp"
#include "qhborel/errors.hpp"
#include "qhborel/json_codec.hpp"
#include "qhborel/model.hpp"

struct qhb_data {
  qhb::QhData value;
};

struct qhb_result {
  std::string json;
};

namespace {

using nlohmann::json;
namespace codec = qhb::json_codec;

thread_local std::string last_error;

qhb_status status_for(qhb::ErrorCode code) {
  using qhb::ErrorCode;
  switch (code) {
    case ErrorCode::Schema:
    case ErrorCode::UnknownLabel:
    case ErrorCode::Cycle:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidSpec: return QHB_ERR_SCHEMA;
    case ErrorCode::InvalidData: return QHB_ERR_VIOLATIONS;
    case ErrorCode::NotRealizable: return QHB_ERR_NOT_REALIZABLE;
    case ErrorCode::Divisibility: return QHB_ERR_DIVISIBILITY;
    case ErrorCode::NotATree: return QHB_ERR_NOT_A_TREE;
    case ErrorCode::Shape:
    case ErrorCode::NotUnitriangular:
    case ErrorCode::NonPositiveK: return QHB_ERR_INVALID_ARGUMENT;
  }
  return QHB_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes and last_error.
template <class F>
qhb_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const qhb::Error& e) {
    last_error = std::string(qhb::to_string(e.code())) + ": " + e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return QHB_ERR_INTERNAL;
  }
}

qhb_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return QHB_ERR_INVALID_ARGUMENT;
}

json labels_of(const qhb::QhData& d) { return d.poset.labels(); }

json violations_json(const qhb::QhData& d, const std::vector<qhb::Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json labels = json::array();
    for (std::size_t i : v.indices) labels.push_back(d.poset.label(i));
    out.push_back({{"invariant", v.invariant},
                   {"field", v.field},
                   {"indices", v.indices},
                   {"labels", std::move(labels)},
                   {"value", codec::encode(v.value)},
                   {"message", v.message}});
  }
  return out;
}

qhb_result* make_result(json result, json violations = json::array()) {
  json doc{{"result", std::move(result)}, {"violations", std::move(violations)}};
  return new qhb_result{doc.dump()};
}

// Analyses refuse invalid data; the violations still travel back in *out.
template <class F>
qhb_status analysis(const qhb_data* data, qhb_result** out, F&& compute) {
  if (!data) return null_argument("data");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto vs = qhb::validate(data->value);
    if (!vs.empty()) {
      *out = make_result(nullptr, violations_json(data->value, vs));
      last_error = "input fails validation: " + vs.front().message;
      return QHB_ERR_VIOLATIONS;
    }
    json r = compute(data->value);
    *out = make_result(std::move(r));
    return QHB_OK;
  });
}

qhb::IntVec parse_k(const char* k_csv, std::size_t n) {
  if (!k_csv) return qhb::IntVec(n, 1);
  qhb::IntVec k;
  std::string text(k_csv);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    qhb::Int value;
    if (item.empty() || value.set_str(item, 10) != 0)
      throw qhb::Error(qhb::ErrorCode::NonPositiveK, "k entry '" + item + "' is not an integer");
    k.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (k.size() != n)
    throw qhb::Error(qhb::ErrorCode::Shape, "k has " + std::to_string(k.size()) +
                                                " entries, expected " + std::to_string(n));
  return k;
}

std::string representative_name(const qhb::QhData& d, const qhb::IntVec& m) {
  std::string s = "End(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += " + ";
    s += "P_" + d.poset.label(i);
    if (m[i] != 1) s += "^" + m[i].get_str();
  }
  return s + ")^op";
}

qhb::PosetSpec parse_tree(const char* text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw qhb::Error(qhb::ErrorCode::Schema, std::string("invalid tree JSON: ") + e.what());
  }
  if (!doc.is_object()) throw qhb::Error(qhb::ErrorCode::Schema, "tree must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "labels" && key != "order")
      throw qhb::Error(qhb::ErrorCode::Schema, "unknown key '" + key + "' in tree");
  qhb::PosetSpec spec;
  if (!doc.contains("labels") || !doc["labels"].is_array())
    throw qhb::Error(qhb::ErrorCode::Schema, "tree needs a labels array");
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw qhb::Error(qhb::ErrorCode::Schema, "tree labels must be strings");
    spec.labels.push_back(l.get<std::string>());
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_array()) throw qhb::Error(qhb::ErrorCode::Schema, "tree order must be an array");
    for (const auto& p : doc["order"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw qhb::Error(qhb::ErrorCode::Schema, "tree order entries must be [a, b] label pairs");
      spec.relations.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return spec;
}

}  // namespace

extern "C" {

const char* qhb_version(void) { return "1.0.0"; }

const char* qhb_last_error(void) { return last_error.c_str(); }

const char* qhb_status_name(qhb_status status) {
  switch (status) {
    case QHB_OK: return "ok";
    case QHB_ERR_SCHEMA: return "schema error";
    case QHB_ERR_VIOLATIONS: return "validation violations";
    case QHB_ERR_NOT_REALIZABLE: return "not realizable";
    case QHB_ERR_DIVISIBILITY: return "divisibility error";
    case QHB_ERR_NOT_A_TREE: return "not a tree";
    case QHB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QHB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

qhb_status qhb_data_from_json(const char* text, size_t len, qhb_data** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new qhb_data{qhb::parse_qhdata(std::string_view(text, len))};
    return QHB_OK;
  });
}

void qhb_data_free(qhb_data* data) { delete data; }

size_t qhb_data_size(const qhb_data* data) { return data ? data->value.size() : 0; }

const char* qhb_data_label(const qhb_data* data, size_t i) {
  if (!data || i >= data->value.size()) return nullptr;
  return data->value.poset.label(i).c_str();
}

char* qhb_data_to_json(const qhb_data* data) {
  if (!data) return nullptr;
  const std::string s = qhb::dump_qhdata(data->value);
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void qhb_string_free(char* s) { delete[] s; }

qhb_status qhb_validate(const qhb_data* data, qhb_result** out) {
  if (!data) return null_argument("data");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto vs = qhb::validate(data->value);
    json r{{"labels", labels_of(data->value)}, {"valid", vs.empty()}};
    *out = make_result(std::move(r), violations_json(data->value, vs));
    return QHB_OK;
  });
}

qhb_status qhb_v_matrix(const qhb_data* data, qhb_result** out) {
  return analysis(data, out, [](const qhb::QhData& d) {
    return json{{"labels", labels_of(d)}, {"V", codec::encode(qhb::compute_V(d).v)}};
  });
}

qhb_status qhb_l_sequence(const qhb_data* data, qhb_result** out) {
  return analysis(data, out, [](const qhb::QhData& d) {
    const auto l = qhb::compute_l(d).l;
    return json{{"labels", labels_of(d)}, {"l", codec::encode(std::span<const qhb::Int>(l))}};
  });
}

qhb_status qhb_borel(const qhb_data* data, qhb_result** out) {
  return analysis(data, out, [](const qhb::QhData& d) {
    const auto verdict = qhb::borel_existence(d);
    json r{{"labels", labels_of(d)},
           {"simple_dims", codec::encode(std::span<const qhb::Int>(d.simple_dims))}};
    if (const auto* good = std::get_if<qhb::Good>(&verdict)) {
      r["verdict"] = "good";
      r["summary"] = "regular exact Borel subalgebra exists";
      r["k"] = codec::encode(std::span<const qhb::Int>(good->k));
    } else {
      const auto& bad = std::get<qhb::NotGood>(verdict);
      json failing = json::array();
      for (std::size_t i : bad.failing) failing.push_back(d.poset.label(i));
      r["verdict"] = "not_good";
      r["summary"] = "no regular exact Borel subalgebra";
      r["witness"] = codec::encode(std::span<const qhb::Rat>(bad.witness));
      r["failing"] = std::move(failing);
    }
    return r;
  });
}

qhb_status qhb_profile(const qhb_data* data, const char* k_csv, qhb_result** out) {
  return analysis(data, out, [k_csv](const qhb::QhData& d) {
    const auto k = parse_k(k_csv, d.size());
    const auto p = qhb::borel_profile(d, k);
    using S = std::span<const qhb::Int>;
    return json{{"labels", labels_of(d)},       {"k", codec::encode(S(k))},
                {"cartan_bop", codec::encode(p.cartan_bop)},
                {"cartan_b", codec::encode(p.cartan_b)},
                {"len_q", codec::encode(S(p.len_q))}, {"len_p", codec::encode(S(p.len_p))},
                {"dim_q", codec::encode(S(p.dim_q))}, {"dim_p", codec::encode(S(p.dim_p))},
                {"dim_b", codec::encode(p.dim_b)},    {"n_table", codec::encode(p.n_table)},
                {"dim_w", codec::encode(p.dim_w)}};
  });
}

qhb_status qhb_representative(const qhb_data* data, const char* k_csv, qhb_result** out) {
  return analysis(data, out, [k_csv](const qhb::QhData& d) {
    const auto k = parse_k(k_csv, d.size());
    const auto m = qhb::representative_multiplicities(d, k);
    using S = std::span<const qhb::Int>;
    return json{{"labels", labels_of(d)},
                {"k", codec::encode(S(k))},
                {"m", codec::encode(S(m))},
                {"representative", representative_name(d, m)}};
  });
}

qhb_status qhb_flags(const qhb_data* data, qhb_result** out) {
  return analysis(data, out, [](const qhb::QhData& d) {
    const auto f = qhb::class_flags(d);
    return json{{"labels", labels_of(d)},
                {"all_good", f.all_good},
                {"v_is_identity", f.v_is_identity},
                {"minimal_good_here", f.minimal_good_here},
                {"height_shortcut", f.height_shortcut}};
  });
}

qhb_status qhb_catalog(const char* family, size_t n, const char* tree_json, int chain,
                       uint64_t seed, qhb_data** out) {
  if (!family) return null_argument("family");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    qhb::FamilySpec spec;
    spec.family = qhb::family_from_name(family);
    spec.n = n;
    spec.chain = chain != 0;
    if (spec.family == qhb::Family::RingelDualTree) {
      if (tree_json) {
        spec.tree = parse_tree(tree_json);
      } else {
        if (n == 0) throw qhb::Error(qhb::ErrorCode::InvalidSpec, "random tree needs n >= 1");
        std::mt19937_64 rng(seed);
        spec.tree = qhb::random_tree(n, rng);
      }
    }
    *out = new qhb_data{qhb::generate(spec)};
    return QHB_OK;
  });
}

qhb_status qhb_morita_twist(const qhb_data* data, const char* k_csv, qhb_data** out) {
  if (!data) return null_argument("data");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto k = parse_k(k_csv, data->value.size());
    *out = new qhb_data{qhb::morita_twist(data->value, k)};
    return QHB_OK;
  });
}

const char* qhb_result_json(const qhb_result* result) {
  return result ? result->json.c_str() : nullptr;
}

void qhb_result_free(qhb_result* result) { delete result; }

}  // extern "C"
