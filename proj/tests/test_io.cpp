#include <doctest.h>

#include <json.hpp>

#include "demroot/report.hpp"
#include "demroot/verify.hpp"

using namespace demroot;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("columns orientation when rows <= cols") {
  // classification exports sometimes carry the unicode minus sign; both must parse
  InputDocument doc = parse_matrix_document("2 3\n−1 2 −1\n−1 −1 2\n");
  CHECK(doc.dim == 2);
  REQUIRE(doc.points.size() == 3);
  CHECK(doc.points[0] == iv({-1, -1}));
  CHECK(doc.points[1] == iv({2, -1}));
  CHECK(doc.points[2] == iv({-1, 2}));
  CHECK(LatticePolytope::hull(doc.points) == simplex_ed_dual(2));
}

TEST_CASE("rows orientation when rows > cols") {
  InputDocument doc = parse_matrix_document("4 3 weight simplex\n1 0 0\n1 3 0\n1 0 3\n-5 -6 -3\n");
  CHECK(doc.dim == 3);
  CHECK(doc.label == "weight simplex");
  REQUIRE(doc.points.size() == 4);
  CHECK(doc.points[3] == iv({-5, -6, -3}));
}

TEST_CASE("square header resolves to rows-as-coordinates") {
  InputDocument doc = parse_matrix_document("2 2\n1 0\n0 1\n");
  CHECK(doc.dim == 2);
  REQUIRE(doc.points.size() == 2);
  CHECK(doc.points[0] == iv({1, 0}));
  CHECK(doc.points[1] == iv({0, 1}));
  CHECK_THROWS_AS(LatticePolytope::hull(doc.points), Error);  // not full-dimensional
}

TEST_CASE("parse errors carry positions; ragged rows are rejected") {
  try {
    parse_matrix_document("2 2\n1 x\n0 1\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_matrix_document("2 3\n1 0\n0 1 2\n");
    FAIL("expected RaggedMatrix");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::RaggedMatrix);
  }
  try {
    parse_matrix_document("2 2\n1 0 5\n0 1\n");
    FAIL("expected RaggedMatrix");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::RaggedMatrix);
  }
  CHECK_THROWS_AS(parse_matrix_document(""), Error);
}

TEST_CASE("batch files are concatenated documents") {
  std::string text = "2 4 square\n1 1 -1 -1\n1 -1 1 -1\n3 2 triangle\n1 0\n0 1\n-1 -1\n";
  auto docs = parse_batch(text);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].label == "square");
  CHECK(docs[0].points.size() == 4);
  CHECK(docs[1].label == "triangle");
  CHECK(docs[1].dim == 2);
  CHECK(docs[1].points.size() == 3);
}

TEST_CASE("vertex document round trip") {
  for (const auto& entry : bundled_corpus()) {
    InputDocument doc = parse_matrix_document(emit_vertices(entry.polytope));
    CHECK(LatticePolytope::hull(doc.points) == entry.polytope);
  }
}

TEST_CASE("report JSON carries the pinned values") {
  using Json = nlohmann::json;
  {
    AnalysisReport rep = analyze_polytope(cube(3), "cube3");
    Json j = Json::parse(emit_report(rep));
    CHECK(j["aut"]["reductive"] == true);
    CHECK(j["aut"]["dim"] == "9");
    CHECK(j["dim"] == "3");
    CHECK(j["reflexive"] == true);
    CHECK(j["roots"]["all"] == "6");
    CHECK(j["decompositions"]["central"]["k"] == "3");
    CHECK(j["violations"].size() == 0);
  }
  {
    auto W = LatticePolytope::hull(
        {iv({1, 0, 0}), iv({1, 3, 0}), iv({1, 0, 3}), iv({-5, -6, -3})});
    Json j = Json::parse(emit_report(analyze_polytope(W, "weight")));
    CHECK(j["roots"]["all"] == "10");
    CHECK(j["roots"]["semisimple"] == "4");
    CHECK(j["roots"]["unipotent"] == "6");
    CHECK(j["aut"]["reductive"] == false);
    CHECK(j["aut"]["dim"] == "13");
    CHECK(j["degree_classes"]["markers"]["p"] == "1");
    CHECK(j["degree_classes"]["markers"]["q"] == "2");
  }
  {
    Json j = Json::parse(emit_report(analyze_polytope(simplex_ed_dual(3), "p3")));
    CHECK(j["criteria"]["reflexive_equivalent"]["a"] == true);
    CHECK(j["criteria"]["sufficient"]["i"] == true);
    CHECK(j["decompositions"]["projective_factors"][0] == "3");
  }
}

TEST_CASE("reports are byte-identical across repeated emission") {
  AnalysisReport rep = analyze_polytope(simplex_ed_dual(2), "p2");
  CHECK(emit_report(rep) == emit_report(rep));
  AnalysisReport rep2 = analyze_polytope(simplex_ed_dual(2), "p2");
  CHECK(emit_report(rep) == emit_report(rep2));
}

TEST_CASE("verify accepts an external corpus") {
  VerifyOptions opt;
  opt.corpus_text = "4 3 extra-weight\n1 0 0\n1 3 0\n1 0 3\n-5 -6 -3\n";
  VerifyResult res = run_verify(opt);
  CHECK(res.violations == 0);
  CHECK(res.text.find("extra:extra-weight: ok") != std::string::npos);
}

TEST_CASE("fan-rays documents analyze through the fan path") {
  InputDocument doc;
  doc.kind = InputDocument::Kind::FanRays;
  doc.dim = 2;
  doc.label = "p2 rays";
  doc.points = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
  AnalysisReport rep = analyze_input(doc);
  CHECK(!rep.reflexive.has_value());
  CHECK(rep.roots.all.size() == 6);
  CHECK(rep.aut.reductive);
  CHECK(rep.aut.aut_dim == 8);
}
