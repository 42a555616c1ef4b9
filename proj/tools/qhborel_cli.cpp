// qhborel command-line front end. Talks to the library only through the C
// API in qhborel/qhborel.h.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qhborel/qhborel.h"

namespace {

using nlohmann::json;

enum Exit : int { kOk = 0, kIoOrSchema = 1, kViolations = 2, kNotRealizable = 3 };

int exit_code_for(qhb_status s) {
  switch (s) {
    case QHB_OK: return kOk;
    case QHB_ERR_VIOLATIONS: return kViolations;
    case QHB_ERR_NOT_REALIZABLE:
    case QHB_ERR_DIVISIBILITY: return kNotRealizable;
    default: return kIoOrSchema;
  }
}

struct DataDeleter {
  void operator()(qhb_data* d) const { qhb_data_free(d); }
};
struct ResultDeleter {
  void operator()(qhb_result* r) const { qhb_result_free(r); }
};
using DataPtr = std::unique_ptr<qhb_data, DataDeleter>;
using ResultPtr = std::unique_ptr<qhb_result, ResultDeleter>;

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

// Aligned grid: first row is the header, remaining rows are the body.
void print_grid(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    os << "  ";
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << std::string(width[c] - r[c].size(), ' ') << r[c];
      if (c + 1 < r.size()) os << "  ";
    }
    os << '\n';
  }
}

bool is_matrix(const json& j, std::size_t n) {
  return j.is_array() && j.size() == n && n > 0 &&
         std::all_of(j.begin(), j.end(), [n](const json& r) { return r.is_array() && r.size() == n; });
}

void render_table(std::ostream& os, const json& report) {
  os << "command: " << report["command"].get<std::string>() << '\n';
  os << "input sha256: " << report["input_sha256"].get<std::string>() << '\n';
  const json& result = report["result"];
  if (result.is_object()) {
    std::vector<std::string> labels;
    if (result.contains("labels"))
      for (const auto& l : result["labels"]) labels.push_back(l.get<std::string>());
    const std::size_t n = labels.size();
    if (result.contains("summary")) os << "summary: " << result["summary"].get<std::string>() << '\n';

    for (const auto& [key, value] : result.items()) {
      if (key == "labels" || key == "summary") continue;
      if (is_matrix(value, n)) {
        os << key << ":\n";
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{""};
        header.insert(header.end(), labels.begin(), labels.end());
        rows.push_back(header);
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<std::string> row{labels[i]};
          for (const auto& x : value[i]) row.push_back(scalar_text(x));
          rows.push_back(std::move(row));
        }
        print_grid(os, rows);
      } else if (value.is_array() && value.size() == n && n > 0 &&
                 std::none_of(value.begin(), value.end(), [](const json& x) { return x.is_array(); }) &&
                 key != "failing") {
        os << key << ":\n";
        std::vector<std::string> body;
        for (const auto& x : value) body.push_back(scalar_text(x));
        print_grid(os, {labels, body});
      } else if (value.is_array()) {
        os << key << ":";
        for (const auto& x : value) os << ' ' << scalar_text(x);
        os << '\n';
      } else if (value.is_object()) {
        os << key << ": " << value.dump() << '\n';
      } else {
        os << key << ": " << scalar_text(value) << '\n';
      }
    }
  }
  const json& violations = report["violations"];
  if (!violations.empty()) {
    os << "violations (" << violations.size() << "):\n";
    for (const auto& v : violations)
      os << "  [" << v["invariant"].get<std::string>() << "] " << v["message"].get<std::string>() << '\n';
  }
}

struct Globals {
  std::string format = "table";
  std::uint64_t seed = 0;
};

void emit(const Globals& g, const json& report) {
  if (g.format == "json")
    std::cout << report.dump(2) << '\n';
  else
    render_table(std::cout, report);
}

json make_report(const std::string& command, const std::string& digest, const qhb_result* r) {
  json body = json::parse(qhb_result_json(r));
  return json{{"command", command},
              {"input_sha256", digest},
              {"result", body["result"]},
              {"violations", body["violations"]}};
}

int fail(qhb_status s) {
  std::cerr << "qhborel: " << qhb_status_name(s) << ": " << qhb_last_error() << '\n';
  return exit_code_for(s);
}

using Analysis = qhb_status (*)(const qhb_data*, const char*, qhb_result**);

int run_analysis(const Globals& g, const std::string& command, const std::string& path,
                 Analysis analysis, const std::optional<std::string>& k) {
  const auto text = read_input(path);
  if (!text) {
    std::cerr << "qhborel: cannot read '" << path << "'\n";
    return kIoOrSchema;
  }
  qhb_data* raw = nullptr;
  if (qhb_status s = qhb_data_from_json(text->data(), text->size(), &raw); s != QHB_OK) return fail(s);
  DataPtr data(raw);

  qhb_result* out = nullptr;
  const qhb_status s = analysis(data.get(), k ? k->c_str() : nullptr, &out);
  ResultPtr result(out);
  if (result) {
    const json report = make_report(command, sha256_hex(*text), result.get());
    emit(g, report);
    if (s == QHB_OK && !report["violations"].empty()) {
      std::cerr << "qhborel: input has " << report["violations"].size() << " violation(s)\n";
      return kViolations;
    }
  }
  return s == QHB_OK ? kOk : fail(s);
}

// Adapters giving every analysis the same signature.
qhb_status do_validate(const qhb_data* d, const char*, qhb_result** o) { return qhb_validate(d, o); }
qhb_status do_v_matrix(const qhb_data* d, const char*, qhb_result** o) { return qhb_v_matrix(d, o); }
qhb_status do_l_seq(const qhb_data* d, const char*, qhb_result** o) { return qhb_l_sequence(d, o); }
qhb_status do_borel(const qhb_data* d, const char*, qhb_result** o) { return qhb_borel(d, o); }
qhb_status do_flags(const qhb_data* d, const char*, qhb_result** o) { return qhb_flags(d, o); }

struct CatalogArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<std::string> tree_path;
  std::optional<std::string> twist;
  bool chain = false;
};

int run_catalog(const Globals& g, const CatalogArgs& a) {
  std::optional<std::string> tree_text;
  if (a.tree_path) {
    tree_text = read_input(*a.tree_path);
    if (!tree_text) {
      std::cerr << "qhborel: cannot read '" << *a.tree_path << "'\n";
      return kIoOrSchema;
    }
  }
  qhb_data* raw = nullptr;
  if (qhb_status s = qhb_catalog(a.family.c_str(), a.n, tree_text ? tree_text->c_str() : nullptr,
                                 a.chain ? 1 : 0, g.seed, &raw);
      s != QHB_OK)
    return fail(s);
  DataPtr data(raw);
  if (a.twist) {
    qhb_data* twisted = nullptr;
    if (qhb_status s = qhb_morita_twist(data.get(), a.twist->c_str(), &twisted); s != QHB_OK)
      return fail(s);
    data.reset(twisted);
  }

  char* dumped = qhb_data_to_json(data.get());
  const std::string text(dumped);
  qhb_string_free(dumped);

  if (g.format != "json") {
    std::cout << text << '\n';
    return kOk;
  }
  std::ostringstream request;
  request << "family=" << a.family << ";n=" << a.n << ";chain=" << a.chain << ";seed=" << g.seed
          << ";twist=" << a.twist.value_or("") << ";tree=" << tree_text.value_or("");
  json result{{"family", a.family}, {"data", json::parse(text)}};
  emit(g, json{{"command", "catalog"},
               {"input_sha256", sha256_hex(request.str())},
               {"result", std::move(result)},
               {"violations", json::array()}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular exact Borel subalgebras of quasihereditary algebras"};
  app.set_version_flag("--version", std::string(qhb_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized helpers")->capture_default_str();

  struct Simple {
    const char* name;
    const char* help;
    Analysis fn;
    bool takes_k;
  };
  const Simple simple[] = {
      {"validate", "Check the data invariants", do_validate, false},
      {"v-matrix", "Composition factors of restricted simples (V)", do_v_matrix, false},
      {"l-seq", "Lengths of restricted simples (row sums of V)", do_l_seq, false},
      {"borel", "Decide existence of a regular exact Borel subalgebra", do_borel, false},
      {"profile", "Cartan data and dimensions of the Borel subalgebra", qhb_profile, true},
      {"representative", "Representative with Borel simple dimensions k", qhb_representative, true},
      {"flags", "Class-level goodness flags", do_flags, false},
  };

  std::string file;
  std::optional<std::string> k;
  const Simple* chosen = nullptr;
  for (const auto& s : simple) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", file, "Input JSON file, '-' for standard input")->required();
    if (s.takes_k) sub->add_option("--k", k, "Borel simple dimensions v1,v2,... (default all ones)");
    sub->callback([&chosen, &s] { chosen = &s; });
  }

  CatalogArgs cat;
  bool catalog = false;
  auto* csub = app.add_subcommand("catalog", "Generate a built-in example family");
  csub->add_option("family", cat.family,
                   "example_a4 | semisimple | erdmann | dual_extension_linear | ringel_dual_tree")
      ->required();
  csub->add_option("--n", cat.n, "Size parameter");
  csub->add_option("--tree", cat.tree_path, "Tree poset JSON {labels, order} for ringel_dual_tree");
  csub->add_option("--twist", cat.twist, "Replace simple dimensions by V k for k = v1,v2,...");
  csub->add_flag("--chain", cat.chain, "semisimple: use the chain order instead of an antichain");
  csub->callback([&catalog] { catalog = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kIoOrSchema;
  }

  if (catalog) return run_catalog(g, cat);
  return run_analysis(g, chosen->name, file, chosen->fn, k);
}
