#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "cplab/error.hpp"
#include "cplab/harness.hpp"
#include "cplab/structure.hpp"

using namespace cplab;

namespace {

Instance make(const std::string& text) { return build_corpus_instance(json::parse(text)); }

json corpus_of(std::initializer_list<const char*> specs) {
  json c{{"schema", 1}, {"instances", json::array()}};
  for (const char* s : specs) c["instances"].push_back(json::parse(s));
  return c;
}

ErrorCode suite_error(const json& corpus) {
  try {
    run_suite(corpus, 1);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::NotFound;
}

}  // namespace

TEST(Verdicts, Helpers) {
  EXPECT_EQ(verdict(true), "pass");
  EXPECT_EQ(verdict(false), "fail");
  EXPECT_EQ(skipped("no phi"), "skipped: no phi");
  const json report = {{"a", {{"verdicts", {{"x", "pass"}, {"y", "fail"}}}}},
                       {"b", json::array({"skipped: n/a", "error: boom"})},
                       {"c", "failure is not a verdict"}};
  const auto failures = collect_failures(report);
  ASSERT_EQ(failures.size(), 2u);
  EXPECT_NE(failures[0].find("/a/verdicts/y"), std::string::npos);
  EXPECT_NE(failures[1].find("error: boom"), std::string::npos);
}

TEST(Probes, CyclicSeven) {
  const Instance c7 = make(R"({"name": "cyclic", "params": {"m": 7}, "automorphism": {"recipe": "power", "k": 2}})");
  const json t1 = theorem1_probe(*c7.phi);
  EXPECT_EQ(t1["e"], 7);
  EXPECT_EQ(t1["n"], 3);
  EXPECT_EQ(t1["e_divides_exponent"], "pass");
  const json t2 = theorem2_probe(*c7.phi, twisted_data(*c7.phi));
  EXPECT_EQ(t2["c"], 0);
  EXPECT_EQ(t2["d"], 1);
  EXPECT_EQ(t2["e"], 7);
  EXPECT_EQ(t2["d_lower_bound"], false);
  EXPECT_EQ(t2["pairs_total"], 28);
  const json th = thompson_probe(*c7.phi);
  EXPECT_EQ(th["fitting_height"], 1);
  EXPECT_EQ(th["omega_n"], 1);
}

TEST(Probes, HeisenbergInverse) {
  const Instance he = make(R"({"name": "heisenberg", "params": {"p": 3}, "automorphism": {"images": [[-1], [-2]]}})");
  const json t2 = theorem2_probe(*he.phi, twisted_data(*he.phi));
  EXPECT_EQ(t2["c"], 1);
  EXPECT_EQ(t2["d"], 2);
  EXPECT_EQ(t2["e"], 3);
  EXPECT_EQ(theorem1_probe(*he.phi)["e"], 3);
}

TEST(Probes, Glauberman) {
  const GlaubermanExample ex = build_glauberman_example();
  const json t1 = theorem1_probe(ex.phi);
  EXPECT_EQ(t1["e"], 620);
  EXPECT_EQ(t1["group_exponent"], 620);
  const json t2 = theorem2_probe(ex.phi, twisted_data(ex.phi));
  ASSERT_TRUE(t2.is_string());
  EXPECT_EQ(t2.get<std::string>().rfind("skipped:", 0), 0u);
  EXPECT_EQ(thompson_probe(ex.phi)["fitting_height"], 2);
}

TEST(Probes, ThompsonHeights) {
  for (auto [text, h] : {std::pair{R"({"name": "symmetric", "params": {"m": 4}, "automorphism": {"recipe": "identity"}})", 3},
                         std::pair{R"({"name": "dihedral", "params": {"m": 7}, "automorphism": {"images": [[1, 1], [2]]}})", 2},
                         std::pair{R"({"name": "affine", "params": {"p": 7, "k": 1, "m": 3}, "automorphism": {"images": [[-1], [2]]}})", 2}}) {
    const Instance inst = make(text);
    EXPECT_EQ(thompson_probe(*inst.phi)["fitting_height"], h) << inst.id;
  }
}

TEST(Reports, GroupStats) {
  const json s4 = group_stats(symmetric_group(4));
  EXPECT_EQ(s4["order"], 24);
  EXPECT_EQ(s4["nilpotent"], false);
  EXPECT_TRUE(s4["nilpotency_class"].is_null());
  EXPECT_EQ(s4["derived_length"], 3);
  EXPECT_EQ(s4["fitting_height"], 3);
  EXPECT_TRUE(s4["p_group"].is_null());
  const json s5 = group_stats(symmetric_group(5));
  EXPECT_EQ(s5["soluble"], false);
  EXPECT_TRUE(s5["derived_length"].is_null());
  EXPECT_TRUE(collect_failures(s5).empty());
}

TEST(Reports, NonCoprimeSkipsCoprimeChecks) {
  const Instance d4 = make(R"({"id": "d4", "name": "dihedral", "params": {"m": 4}, "automorphism": {"recipe": "inner", "word": [1]}})");
  const json r = analyze_instance(d4);
  EXPECT_EQ(r["status"], "ok");
  EXPECT_EQ(r["automorphism"]["coprime"], false);
  EXPECT_EQ(r["automorphism"]["verdicts"]["orbit_count"], "pass");
  const std::string fact = r["automorphism"]["verdicts"]["quotient_fixed_points"];
  EXPECT_EQ(fact.rfind("skipped:", 0), 0u);
  EXPECT_TRUE(r["failures"].empty());
}

TEST(Suite, EmptyAndErrors) {
  const SuiteResult empty = run_suite(json{{"schema", 1}, {"instances", json::array()}}, 4);
  EXPECT_FALSE(empty.hard_failure);
  EXPECT_EQ(empty.bundle["summary"]["instances"], 0);

  EXPECT_EQ(suite_error(json{{"schema", 2}, {"instances", json::array()}}), ErrorCode::ParseError);
  EXPECT_EQ(suite_error(json{{"schema", 1}}), ErrorCode::ParseError);
  EXPECT_EQ(suite_error(json::array()), ErrorCode::ParseError);
}

TEST(Suite, BadInstancesAreRecorded) {
  const SuiteResult r = run_suite(corpus_of({R"({"id": "big", "name": "symmetric", "params": {"m": 6}})",
                                             R"({"id": "bogus", "name": "nonsense"})",
                                             R"({"id": "ok", "name": "cyclic", "params": {"m": 5}})"}),
                                  2, 500);
  const json& inst = r.bundle["instances"];
  ASSERT_EQ(inst.size(), 3u);
  EXPECT_EQ(inst[0]["status"].get<std::string>().rfind("skipped:", 0), 0u);
  EXPECT_EQ(inst[1]["status"].get<std::string>().rfind("error:", 0), 0u);
  EXPECT_EQ(inst[2]["status"], "ok");
  EXPECT_TRUE(r.hard_failure);
  EXPECT_EQ(r.bundle["summary"]["failed_instances"], 1);
}

TEST(Suite, DeterministicAcrossJobs) {
  const json corpus = corpus_of({R"({"id": "c7", "name": "cyclic", "params": {"m": 7}, "automorphism": {"recipe": "power", "k": 2}})",
                                 R"({"id": "he3", "name": "heisenberg", "params": {"p": 3}, "automorphism": {"images": [[-1], [-2]]}})",
                                 R"({"id": "s4", "name": "symmetric", "params": {"m": 4}, "automorphism": {"recipe": "identity"}})",
                                 R"({"id": "q8", "name": "quaternion", "params": {"m": 2}, "automorphism": {"images": [[2], [1, 2]]}})",
                                 R"({"id": "f21", "name": "affine", "params": {"p": 7, "k": 1, "m": 3}, "automorphism": {"images": [[-1], [2]]}})"});
  const std::string one = run_suite(corpus, 1).bundle.dump(2);
  EXPECT_EQ(run_suite(corpus, 3).bundle.dump(2), one);
  EXPECT_EQ(run_suite(corpus, 8).bundle.dump(2), one);
  const json parsed = json::parse(one);
  EXPECT_EQ(parsed["instances"][1]["id"], "he3");
  EXPECT_EQ(parsed["summary"]["hard_failure"], false);
}

TEST(Files, LoadJsonReportsOffset) {
  const std::string path = ::testing::TempDir() + "cplab_broken.json";
  {
    std::ofstream out(path);
    out << "{\"schema\": 1, \"instances\": [}";
  }
  try {
    load_json_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
  }
  std::remove(path.c_str());
  EXPECT_THROW(load_json_file(path), Error);
}
