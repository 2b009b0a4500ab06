#include <gtest/gtest.h>

#include <filesystem>

#include "qgk/catalog.hpp"
#include "qgk/io.hpp"

namespace {

using namespace qgk;

TEST(Json, SyntaxErrorCarriesByteOffset) {
  try {
    parse_json("{\"dim\": 3,, }");
    FAIL() << "no exception";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 11"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), InputError);
}

TEST(Json, Complex) {
  EXPECT_EQ(complex_from_json(complex_json(cplx(1.5, -2))), cplx(1.5, -2));
  EXPECT_THROW(complex_from_json(json::array({1})), InputError);
  EXPECT_THROW(complex_from_json(json("x")), InputError);
}

TEST(Json, GroupRoundTrip) {
  FiniteGroup g = named_group("D4");
  FiniteGroup h = group_from_json(to_json(g));
  EXPECT_EQ(h.table, g.table);
  EXPECT_EQ(h.names, g.names);
  json bad = to_json(g);
  bad["cayley"][0][0] = 3;
  EXPECT_ANY_THROW(group_from_json(bad));
}

TEST(Json, QuantumGroupRoundTrip) {
  for (const std::string name : {"cstar-S3", "fun-Q8", "pauli", "wall32"}) {
    QG q = build_example(name);
    json j = to_json(*q);
    QG r = quantum_group_from_json(j);
    EXPECT_EQ(dump(to_json(*r)), dump(j)) << name;
    EXPECT_TRUE(verify_hopf_axioms(*r).pass);
  }
}

TEST(Json, MissingHaarAndUnitAreSolved) {
  QG q = build_example("fun-S3");
  json j = to_json(*q);
  j.erase("haar");
  j.erase("unit");
  QG r = quantum_group_from_json(j);
  EXPECT_LT(max_abs(Vec(r->haar() - q->haar())), 1e-12);
  EXPECT_LT(max_abs(Vec(r->unit() - q->unit())), 1e-12);
}

TEST(Json, GroupFileAsQuantumGroup) {
  FiniteGroup g = named_group("S3");
  QG q = quantum_group_from_json(to_json(g));
  EXPECT_EQ(q->dim(), 6);
  EXPECT_TRUE(q->cocommutative());
}

TEST(Json, SchemaViolations) {
  QG q = build_example("cstar-Z3");
  json j = to_json(*q);
  json a = j;
  a["dim"] = 4;
  EXPECT_THROW(quantum_group_from_json(a), InputError);
  json b = j;
  b.erase("mult");
  EXPECT_THROW(quantum_group_from_json(b), InputError);
  json c = j;
  c["comult"].push_back(json::array({0, 0, 9, 1.0, 0.0}));
  EXPECT_THROW(quantum_group_from_json(c), InputError);
  json d = j;
  d["mult"][0] = json::array({0, 0});
  EXPECT_THROW(quantum_group_from_json(d), InputError);
}

TEST(Json, CorepAndCocycleRoundTrip) {
  QG q = build_example("pauli");
  Corepresentation u = named_corep("pauli", q, "pauli");
  Corepresentation v = corep_from_json(to_json(u, "pauli"), q);
  EXPECT_EQ(v.n, u.n);
  EXPECT_EQ(max_abs(Mat(v.coeffs - u.coeffs)), 0.0);
  Cocycle w = named_cocycle("pauli", q, "pauli-omega");
  Cocycle x = cocycle_from_json(to_json(w, "pauli"), q);
  EXPECT_EQ(max_abs(Mat(x.value - w.value)), 0.0);
  json bad = to_json(u, "pauli");
  bad["coeffs"].push_back(json::array({5, 0, 0, 1.0, 0.0}));
  EXPECT_THROW(corep_from_json(bad, q), InputError);
}

TEST(Report, DeterministicWithoutTimings) {
  auto run = [] {
    VerificationReport r;
    r.command = {"qgk", "verify"};
    r.tol = 1e-9;
    r.seed = 3;
    QG q = build_example("wall32");
    r.add(verify_hopf_axioms(*q).checks);
    r.details["classification"] = to_json(classify(named_corep("wall32", q, "wall-v")));
    r.timings_ms.emplace_back("total", Stopwatch().ms());
    return r;
  };
  VerificationReport a = run(), b = run();
  EXPECT_EQ(dump(a.to_json(false)), dump(b.to_json(false)));
  EXPECT_TRUE(a.pass());
  EXPECT_TRUE(a.to_json(true).contains("timings_ms"));
  EXPECT_FALSE(a.to_json(false).contains("timings_ms"));
  a.add("extra", false, 1.0);
  EXPECT_FALSE(a.pass());
}

TEST(Report, StructuredResults) {
  QG q = build_example("wall32");
  TrivialityResult t = is_trivial_invariant_class(named_cocycle("wall32", q, "wall-omega"));
  json j = to_json(t);
  EXPECT_EQ(j.at("trivial"), false);
  EXPECT_TRUE(j.contains("reason"));
  Decomposition d = decompose(regular_corep(build_example("fun-S3")));
  json k = to_json(d);
  EXPECT_EQ(k.at("components").size(), 3u);
}

TEST(Files, WriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "qgk_io_test.json";
  json j = to_json(*build_example("cstar-Z3"));
  write_json_file(path.string(), j);
  EXPECT_EQ(read_json_file(path.string()), j);
  std::filesystem::remove(path);
  EXPECT_THROW(write_json_file("/nonexistent/dir/x.json", j), InputError);
}

}  // namespace
