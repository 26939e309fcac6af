#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlmw/duality.hpp"
#include "mlmw/fixtures.hpp"
#include "mlmw/io.hpp"
#include "mlmw/lm.hpp"
#include "mlmw/quantifier.hpp"

using namespace mlmw;

TEST_CASE("algebra documents round-trip byte-exactly for every fixture") {
  for (const std::string& name : fixture_names()) {
    FiniteAlgebra L = fixture(name);
    AlgebraDocument doc =
        document_from_algebra(L, {{"fixture", name}, {"a", "b c"}});
    std::string text = emit_algebra_document(doc);
    AlgebraDocument parsed = parse_algebra_document(text);
    CHECK(parsed == doc);
    CHECK(emit_algebra_document(parsed) == text);
  }
}

TEST_CASE("documents rebuild the algebra they came from") {
  for (const std::string& name : fixture_names()) {
    FiniteAlgebra L = fixture(name);
    AlgebraDocument doc = document_from_algebra(L);
    BuildResult built = algebra_from_document(doc);
    REQUIRE(built.algebra.has_value());
    CHECK(built.algebra->meet == L.meet);
    CHECK(built.algebra->join == L.join);
    CHECK(built.algebra->neg == L.neg);
    CHECK(built.algebra->sigma == L.sigma);
    CHECK(built.algebra->exists == L.exists);
    CHECK(built.algebra->bottom == L.bottom);
    CHECK(built.algebra->top == L.top);
    CHECK(check_lm_axioms(*built.algebra).ok());
  }
}

TEST_CASE("meet-join form documents parse and agree with the order form") {
  for (const std::string& name : fixture_names()) {
    FiniteAlgebra L = fixture(name);
    AlgebraDocument doc = document_from_algebra(L);
    doc.order_form = false;
    doc.order = PosetTable{};
    doc.meet = L.meet;
    doc.join = L.join;
    std::string text = emit_algebra_document(doc);
    AlgebraDocument parsed = parse_algebra_document(text);
    CHECK(parsed == doc);
    CHECK(emit_algebra_document(parsed) == text);
    BuildResult built = algebra_from_document(parsed);
    REQUIRE(built.algebra.has_value());
    CHECK(built.algebra->leq.leq == L.leq.leq);
    CHECK(built.algebra->bottom == L.bottom);
    CHECK(built.algebra->top == L.top);
  }
}

TEST_CASE("the CHAIN3 document matches its frozen canonical form") {
  const std::string golden =
      "mlmw-algebra 1\n"
      "n 3\n"
      "m 2\n"
      "elements 3\n"
      "name 0\n"
      "name c\n"
      "name 1\n"
      "tables order\n"
      "order 111\n"
      "order 011\n"
      "order 001\n"
      "neg 2 1 0\n"
      "sigma 1 1 : 0 0 2\n"
      "sigma 2 1 : 0 2 2\n"
      "exists 0 1 2\n"
      "end\n";
  CHECK(emit_algebra_document(document_from_algebra(fixture("CHAIN3"))) ==
        golden);
}

TEST_CASE("a corrupted sigma table surfaces as a determination failure") {
  FiniteAlgebra L = fixture("CHAIN3");
  AlgebraDocument doc = document_from_algebra(L);
  doc.sigma[1].second.map[1] = 0;  // sigma_21(c) := 0
  BuildResult built = algebra_from_document(doc);
  REQUIRE(built.algebra.has_value());
  Report r = check_lm_axioms(*built.algebra);
  CHECK(r.names("C5"));
}

TEST_CASE("truncated documents fail with a parse position") {
  FiniteAlgebra L = fixture("CHAIN3");
  std::string text = emit_algebra_document(document_from_algebra(L));
  std::string truncated = text.substr(0, text.size() / 2);
  try {
    parse_algebra_document(truncated);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line > 0);
    CHECK(e.col > 0);
  }
}

TEST_CASE("malformed rows are rejected with positions") {
  CHECK_THROWS_AS(parse_algebra_document("mlmw-algebra 2\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_document("bogus\n"), ParseError);
  FiniteAlgebra L = fixture("TRIV2");
  std::string text = emit_algebra_document(document_from_algebra(L));
  // a sigma value out of range
  std::string bad = text;
  bad.replace(bad.find("sigma 1 1 : 0 1"), 15, "sigma 1 1 : 0 7");
  CHECK_THROWS_AS(parse_algebra_document(bad), ParseError);
}

TEST_CASE("duplicate names are a structural error") {
  FiniteAlgebra L = fixture("TRIV2");
  AlgebraDocument doc = document_from_algebra(L);
  doc.names[1] = doc.names[0];
  CHECK_THROWS_AS(algebra_from_document(doc), StructuralError);
}

TEST_CASE("an order that is not a lattice is a law failure, not a crash") {
  // two incomparable points with no bounds
  AlgebraDocument doc;
  doc.n = 2;
  doc.m = 2;
  doc.names = {"x", "y"};
  doc.order_form = true;
  doc.order.leq = {{true, false}, {false, true}};
  doc.neg.map = {1, 0};
  OpTable1 sig;
  sig.map = {0, 1};
  doc.sigma.push_back({{1, 1}, sig});
  BuildResult built = algebra_from_document(doc);
  CHECK_FALSE(built.algebra.has_value());
  CHECK_FALSE(built.problems.ok());
}

TEST_CASE("space documents round-trip byte-exactly") {
  for (const std::string& name : fixture_names()) {
    MlmSpace X = spectrum(fixture(name)).space;
    SpaceDocument doc = document_from_space(X, {{"source", name}});
    std::string text = emit_space_document(doc);
    SpaceDocument parsed = parse_space_document(text);
    CHECK(parsed == doc);
    CHECK(emit_space_document(parsed) == text);
    MlmSpace rebuilt = space_from_document(parsed);
    CHECK(check_mlm_space(rebuilt).ok());
    CHECK(rebuilt.leq.leq == X.leq.leq);
    CHECK(rebuilt.g == X.g);
    CHECK(rebuilt.E == X.E);
  }
}

TEST_CASE("corrupted space documents surface law failures") {
  MlmSpace X = spectrum(fixture("CHAIN3")).space;
  SpaceDocument doc = document_from_space(X);
  // break the involution: g no longer order-reversing on the 2-chain
  doc.g.map = {0, 1};
  MlmSpace bad = space_from_document(doc);
  Report r = check_mlm_space(bad);
  CHECK_FALSE(r.ok());
  // E6 fails: f tables are g-invariant only for the swapping involution
  CHECK((r.names("E6") || r.names("E1") || r.names("E7")));
}

TEST_CASE("document kinds are detected from the header") {
  FiniteAlgebra L = fixture("TRIV2");
  std::string alg = emit_algebra_document(document_from_algebra(L));
  CHECK(detect_kind(alg) == DocumentKind::algebra);
  MlmSpace X = spectrum(L).space;
  std::string spc = emit_space_document(document_from_space(X));
  CHECK(detect_kind(spc) == DocumentKind::space);
  CHECK_THROWS_AS(detect_kind("nonsense"), ParseError);
}
