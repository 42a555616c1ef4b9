#include "qhborel/model.hpp"

#include <set>

#include "qhborel/errors.hpp"
#include "qhborel/json_codec.hpp"

namespace qhb {

namespace {

using nlohmann::json;

void require_extent(const IntMat& m, std::size_t n, const char* name) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" +
                    std::to_string(n));
}

class Collector {
 public:
  explicit Collector(const Poset& p) : poset_(p) {}

  void add(std::string invariant, std::string field, std::size_t r, std::size_t c,
           const Int& value, const std::string& what) {
    out_.push_back({std::move(invariant), field, {r, c}, value,
                    field + "[" + poset_.label(r) + "][" + poset_.label(c) + "] = " +
                        value.get_str() + ": " + what});
  }

  std::vector<Violation> take() { return std::move(out_); }
  std::vector<Violation>& list() { return out_; }

 private:
  const Poset& poset_;
  std::vector<Violation> out_;
};

// Decomposition matrix rows are modules, columns simples: entry (i, j) may
// be nonzero only for j <= i, and the diagonal is one.
void check_decomposition(const IntMat& m, const Poset& p, const char* field, Collector& c) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int& x = m(i, j);
      if (i == j) {
        if (x != 1) c.add(std::string(field) + "_diagonal", field, i, j, x, "diagonal must be 1");
      } else if (sgn(x) < 0) {
        c.add("nonnegative", field, i, j, x, "multiplicities are nonnegative");
      } else if (sgn(x) != 0 && !p.leq(j, i)) {
        c.add(std::string(field) + "_support", field, i, j, x,
              "composition factor L_" + p.label(j) + " requires " + p.label(j) + " <= " +
                  p.label(i));
      }
    }
}

IntMat parse_matrix(const json& j, const char* field) {
  if (!j.is_array()) throw Error(ErrorCode::Schema, std::string(field) + " must be an array of rows");
  std::vector<IntVec> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    if (!row.is_array())
      throw Error(ErrorCode::Schema, std::string(field) + "[" + std::to_string(r) + "] must be an array");
    IntVec values;
    for (std::size_t c = 0; c < row.size(); ++c)
      values.push_back(json_codec::decode_int(
          row[c], std::string(field) + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    rows.push_back(std::move(values));
  }
  try {
    return IntMat::from_rows(rows);
  } catch (const Error& e) {
    throw Error(ErrorCode::DimensionMismatch, std::string(field) + ": " + e.what());
  }
}

}  // namespace

std::vector<Violation> validate(const QhData& data) {
  const Poset& p = data.poset;
  const std::size_t n = p.size();
  require_extent(data.delta, n, "delta");
  require_extent(data.nabla, n, "nabla");
  require_extent(data.hom, n, "hom");
  if (data.simple_dims.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "simple_dims has " + std::to_string(data.simple_dims.size()) +
                    " entries, expected " + std::to_string(n));

  Collector c(p);
  check_decomposition(data.delta, p, "delta", c);
  check_decomposition(data.nabla, p, "nabla", c);

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Int& h = data.hom(j, i);
      if (i == j) {
        if (h != 1) c.add("hom_diagonal", "hom", j, i, h, "End(Delta_i) must be one-dimensional");
      } else if (sgn(h) < 0) {
        c.add("nonnegative", "hom", j, i, h, "dimensions are nonnegative");
      } else if (sgn(h) != 0 && !p.leq(j, i)) {
        c.add("hom_support", "hom", j, i, h,
              "a nonzero map Delta_" + p.label(j) + " -> Delta_" + p.label(i) + " requires " +
                  p.label(j) + " <= " + p.label(i));
      } else if (sgn(data.delta(i, j)) >= 0 && h > data.delta(i, j)) {
        c.add("hom_bound", "hom", j, i, h,
              "exceeds [Delta_" + p.label(i) + " : L_" + p.label(j) + "] = " +
                  data.delta(i, j).get_str());
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    if (data.simple_dims[i] < 1)
      c.list().push_back({"simple_dims_positive", "simple_dims", {i}, data.simple_dims[i],
                          "simple_dims[" + p.label(i) + "] = " + data.simple_dims[i].get_str() +
                              ": simple modules have positive dimension"});
  return c.take();
}

void require_valid(const QhData& data) {
  auto violations = validate(data);
  if (!violations.empty())
    throw Error(ErrorCode::InvalidData,
                "input fails validation (" + std::to_string(violations.size()) +
                    " violation(s)); first: " + violations.front().message);
}

FiltrationMatrices filtration_matrices(const QhData& data) {
  return {data.nabla.transposed(), data.delta.transposed()};
}

QhData parse_qhdata(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Schema, "top level must be a JSON object");

  static const std::set<std::string> known{"labels", "order", "delta", "nabla", "hom", "simple_dims"};
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) throw Error(ErrorCode::Schema, "unknown key '" + key + "'");
  for (const auto& key : known)
    if (!doc.contains(key)) throw Error(ErrorCode::Schema, "missing key '" + key + "'");

  PosetSpec spec;
  if (!doc["labels"].is_array()) throw Error(ErrorCode::Schema, "labels must be an array of strings");
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw Error(ErrorCode::Schema, "labels must be strings, got " + l.dump());
    spec.labels.push_back(l.get<std::string>());
  }
  if (!doc["order"].is_array()) throw Error(ErrorCode::Schema, "order must be an array of pairs");
  for (const auto& pair : doc["order"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw Error(ErrorCode::Schema, "order entries must be [a, b] label pairs, got " + pair.dump());
    spec.relations.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }

  QhData data{Poset::build(spec), parse_matrix(doc["delta"], "delta"),
              parse_matrix(doc["nabla"], "nabla"), parse_matrix(doc["hom"], "hom"), {}};
  if (!doc["simple_dims"].is_array()) throw Error(ErrorCode::Schema, "simple_dims must be an array");
  for (std::size_t i = 0; i < doc["simple_dims"].size(); ++i)
    data.simple_dims.push_back(
        json_codec::decode_int(doc["simple_dims"][i], "simple_dims[" + std::to_string(i) + "]"));

  const std::size_t n = data.size();
  require_extent(data.delta, n, "delta");
  require_extent(data.nabla, n, "nabla");
  require_extent(data.hom, n, "hom");
  if (data.simple_dims.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "simple_dims has " +
                                                  std::to_string(data.simple_dims.size()) +
                                                  " entries, expected " + std::to_string(n));
  return data;
}

std::string dump_qhdata(const QhData& data, int indent) {
  const Poset& p = data.poset;
  json order = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j : p.immediate_predecessors(i)) order.push_back({p.label(j), p.label(i)});

  const std::pair<const char*, json> fields[] = {
      {"labels", p.labels()},
      {"order", std::move(order)},
      {"delta", json_codec::encode(data.delta)},
      {"nabla", json_codec::encode(data.nabla)},
      {"hom", json_codec::encode(data.hom)},
      {"simple_dims", json_codec::encode(std::span<const Int>(data.simple_dims))},
  };
  if (indent < 0) {
    json doc;
    for (const auto& [key, value] : fields) doc[key] = value;
    return doc.dump();
  }

  // Schema key order, one matrix row per line.
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string out = "{\n";
  for (std::size_t f = 0; f < std::size(fields); ++f) {
    const auto& [key, value] = fields[f];
    out += pad + json(key).dump() + ": ";
    const bool matrix = !value.empty() && value.front().is_array() && std::string_view(key) != "order";
    if (matrix) {
      out += "[\n";
      for (std::size_t r = 0; r < value.size(); ++r)
        out += pad + pad + value[r].dump() + (r + 1 < value.size() ? ",\n" : "\n");
      out += pad + "]";
    } else {
      out += value.dump();
    }
    out += f + 1 < std::size(fields) ? ",\n" : "\n";
  }
  return out + "}";
}

}  // namespace qhb
