#include "qhborel/qhborel.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstring>
#include <memory>
#include <string>
#include <thread>

namespace {

using nlohmann::json;

struct Data {
  qhb_data* p = nullptr;
  ~Data() { qhb_data_free(p); }
};

struct Result {
  qhb_result* p = nullptr;
  ~Result() { qhb_result_free(p); }
  json doc() const { return json::parse(qhb_result_json(p)); }
};

const char* kA4Json = R"({
  "labels": ["1", "2", "3", "4"],
  "order": [["1", "2"], ["2", "3"], ["3", "4"]],
  "delta": [[1,0,0,0],[0,1,0,0],[0,1,1,0],[0,0,0,1]],
  "nabla": [[1,0,0,0],[1,1,0,0],[0,0,1,0],[0,0,1,1]],
  "hom":   [[1,0,0,0],[0,1,1,0],[0,0,1,0],[0,0,0,1]],
  "simple_dims": [1, 1, 1, 1]
})";

qhb_status load(const std::string& text, Data& d) { return qhb_data_from_json(text.data(), text.size(), &d.p); }

qhb_status catalog(const char* family, size_t n, Data& d, uint64_t seed = 0) {
  return qhb_catalog(family, n, nullptr, 0, seed, &d.p);
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(qhb_version(), "");
  EXPECT_STREQ(qhb_status_name(QHB_OK), "ok");
  EXPECT_STREQ(qhb_status_name(QHB_ERR_DIVISIBILITY), "divisibility error");
}

TEST(CApi, LoadsDataAndExposesLabels) {
  Data d;
  ASSERT_EQ(load(kA4Json, d), QHB_OK);
  EXPECT_EQ(qhb_data_size(d.p), 4u);
  EXPECT_STREQ(qhb_data_label(d.p, 2), "3");
  EXPECT_EQ(qhb_data_label(d.p, 4), nullptr);
}

TEST(CApi, SchemaFailuresSetLastError) {
  Data d;
  EXPECT_EQ(load("{\"labels\": []", d), QHB_ERR_SCHEMA);
  EXPECT_EQ(d.p, nullptr);
  EXPECT_NE(std::string(qhb_last_error()).find("SchemaError"), std::string::npos);
  std::string ragged = kA4Json;
  ragged.replace(ragged.find("[0,0,0,1]]"), 10, "[0,0,1]]");
  EXPECT_EQ(load(ragged, d), QHB_ERR_SCHEMA);
  EXPECT_NE(std::string(qhb_last_error()).find("DimensionMismatch"), std::string::npos);
}

TEST(CApi, NullArguments) {
  Data d;
  Result r;
  EXPECT_EQ(qhb_data_from_json(nullptr, 0, &d.p), QHB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(qhb_v_matrix(nullptr, &r.p), QHB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(qhb_catalog(nullptr, 3, nullptr, 0, 0, &d.p), QHB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(qhb_data_to_json(nullptr), nullptr);
  EXPECT_EQ(qhb_result_json(nullptr), nullptr);
}

TEST(CApi, ValidateReportsViolationsWithLabels) {
  std::string bad = kA4Json;
  bad.replace(bad.find("[0,0,1,0],[0,0,0,1]]"), 20, "[1,0,1,0],[0,0,0,1]]");  // hom[2][0] = 1
  Data d;
  ASSERT_EQ(load(bad, d), QHB_OK);
  Result r;
  ASSERT_EQ(qhb_validate(d.p, &r.p), QHB_OK);
  json doc = r.doc();
  EXPECT_FALSE(doc["result"]["valid"].get<bool>());
  ASSERT_EQ(doc["violations"].size(), 1u);
  EXPECT_EQ(doc["violations"][0]["invariant"], "hom_support");
  EXPECT_EQ(doc["violations"][0]["labels"], json::array({"3", "1"}));

  Result v;
  EXPECT_EQ(qhb_v_matrix(d.p, &v.p), QHB_ERR_VIOLATIONS);
  ASSERT_NE(v.p, nullptr);
  EXPECT_TRUE(v.doc()["result"].is_null());
  EXPECT_EQ(v.doc()["violations"].size(), 1u);
}

TEST(CApi, AnalysesOnExample) {
  Data d;
  ASSERT_EQ(load(kA4Json, d), QHB_OK);
  Result v, l, b, rep, fl;
  ASSERT_EQ(qhb_v_matrix(d.p, &v.p), QHB_OK);
  EXPECT_EQ(v.doc()["result"]["V"], json::parse("[[1,0,0,0],[0,1,0,0],[1,0,1,0],[0,0,0,1]]"));
  ASSERT_EQ(qhb_l_sequence(d.p, &l.p), QHB_OK);
  EXPECT_EQ(l.doc()["result"]["l"], json::parse("[1,1,2,1]"));
  ASSERT_EQ(qhb_borel(d.p, &b.p), QHB_OK);
  EXPECT_EQ(b.doc()["result"]["verdict"], "not_good");
  EXPECT_EQ(b.doc()["result"]["summary"], "no regular exact Borel subalgebra");
  EXPECT_EQ(b.doc()["result"]["witness"], json::parse("[1,1,0,1]"));
  EXPECT_EQ(b.doc()["result"]["failing"], json::array({"3"}));
  ASSERT_EQ(qhb_representative(d.p, nullptr, &rep.p), QHB_OK);
  EXPECT_EQ(rep.doc()["result"]["m"], json::parse("[1,1,2,1]"));
  EXPECT_EQ(rep.doc()["result"]["representative"], "End(P_1 + P_2 + P_3^2 + P_4)^op");
  ASSERT_EQ(qhb_flags(d.p, &fl.p), QHB_OK);
  EXPECT_FALSE(fl.doc()["result"]["all_good"].get<bool>());
}

TEST(CApi, ProfileAndKHandling) {
  Data d;
  ASSERT_EQ(catalog("dual_extension_linear", 3, d), QHB_OK);
  Result p;
  ASSERT_EQ(qhb_profile(d.p, "1,1,1", &p.p), QHB_OK);
  EXPECT_EQ(p.doc()["result"]["dim_w"], 12);
  EXPECT_EQ(p.doc()["result"]["dim_b"], 7);

  Result bad;
  EXPECT_EQ(qhb_profile(d.p, "1,0,1", &bad.p), QHB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(qhb_profile(d.p, "1,1", &bad.p), QHB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(qhb_profile(d.p, "1,x,1", &bad.p), QHB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(qhb_profile(d.p, "2,1,1", &bad.p), QHB_ERR_DIVISIBILITY);
}

TEST(CApi, BigIntegersAreStrings) {
  Data d;
  ASSERT_EQ(catalog("dual_extension_linear", 60, d), QHB_OK);
  Result l;
  ASSERT_EQ(qhb_l_sequence(d.p, &l.p), QHB_OK);
  json seq = l.doc()["result"]["l"];
  EXPECT_EQ(seq[53], 4503599627370496);      // 2^52 stays a number
  EXPECT_EQ(seq[54], "9007199254740992");    // 2^53
  EXPECT_EQ(seq[59], "288230376151711744");  // 2^58
}

TEST(CApi, CatalogFamilies) {
  for (const char* f : {"example_a4", "semisimple", "erdmann", "dual_extension_linear", "ringel_dual_tree"}) {
    Data d;
    ASSERT_EQ(catalog(f, 5, d, 9), QHB_OK) << f;
    Result r;
    ASSERT_EQ(qhb_validate(d.p, &r.p), QHB_OK);
    EXPECT_TRUE(r.doc()["result"]["valid"].get<bool>()) << f;
  }
  Data d;
  EXPECT_EQ(catalog("no_such_family", 3, d), QHB_ERR_SCHEMA);
  EXPECT_EQ(catalog("erdmann", 0, d), QHB_ERR_SCHEMA);
}

TEST(CApi, CatalogTreeInput) {
  Data d;
  ASSERT_EQ(qhb_catalog("ringel_dual_tree", 0, R"({"labels":["1","2"],"order":[["1","2"]]})", 0, 0, &d.p),
            QHB_OK);
  char* text = qhb_data_to_json(d.p);
  json doc = json::parse(text);
  qhb_string_free(text);
  EXPECT_EQ(doc["delta"], json::parse("[[1,1],[0,1]]"));
  EXPECT_EQ(doc["order"], json::parse(R"([["2","1"]])"));

  Data bad;
  EXPECT_EQ(qhb_catalog("ringel_dual_tree", 0,
                        R"({"labels":["a","b","c"],"order":[["a","c"],["b","c"]]})", 0, 0, &bad.p),
            QHB_ERR_NOT_A_TREE);
  EXPECT_EQ(qhb_catalog("ringel_dual_tree", 0, R"({"labels":["a"],"extra":1})", 0, 0, &bad.p),
            QHB_ERR_SCHEMA);
}

TEST(CApi, MoritaTwistRoundTrip) {
  Data d, t;
  ASSERT_EQ(catalog("example_a4", 0, d), QHB_OK);
  ASSERT_EQ(qhb_morita_twist(d.p, "2,1,1,3", &t.p), QHB_OK);
  Result b;
  ASSERT_EQ(qhb_borel(t.p, &b.p), QHB_OK);
  EXPECT_EQ(b.doc()["result"]["verdict"], "good");
  EXPECT_EQ(b.doc()["result"]["k"], json::parse("[2,1,1,3]"));
  EXPECT_EQ(b.doc()["result"]["simple_dims"], json::parse("[2,1,3,3]"));
}

TEST(CApi, NotRealizableStatus) {
  std::string text = R"({"labels":["1","2","3"],"order":[["1","2"],["2","3"]],
    "delta":[[1,0,0],[0,1,0],[1,0,1]],"nabla":[[1,0,0],[0,1,0],[0,0,1]],
    "hom":[[1,0,0],[0,1,0],[0,0,1]],"simple_dims":[1,1,1]})";
  Data d;
  ASSERT_EQ(load(text, d), QHB_OK);
  Result r;
  EXPECT_EQ(qhb_v_matrix(d.p, &r.p), QHB_ERR_NOT_REALIZABLE);
  EXPECT_EQ(r.p, nullptr);
  EXPECT_NE(std::string(qhb_last_error()).find("NotRealizable"), std::string::npos);
}

TEST(CApi, LastErrorIsPerThread) {
  Data d;
  ASSERT_EQ(load("not json", d), QHB_ERR_SCHEMA);
  std::string other;
  std::thread([&] {
    Data e;
    EXPECT_EQ(catalog("erdmann", 3, e), QHB_OK);
    other = qhb_last_error();
  }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(qhb_last_error()), "");
}

}  // namespace
