#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mlmw/fixtures.hpp"
#include "mlmw/lm.hpp"
#include "mlmw/quantifier.hpp"
#include "mlmw/representation.hpp"

using namespace mlmw;

TEST_CASE("fixtures pass the De Morgan and LM axiom suites") {
  for (const std::string& name : fixture_names()) {
    FiniteAlgebra L = fixture(name);
    CHECK(L.check_shape().ok());
    CHECK(check_de_morgan(L).ok());
    CHECK(check_lm_axioms(L).ok());
  }
}

TEST_CASE("a corrupted sigma table breaks the determination axiom") {
  FiniteAlgebra L = fixture("CHAIN3");
  L.sigma[L.sigma_index(2, 1)].map[1] = 0;  // sigma_21(c) := 0
  Report r = check_lm_axioms(L);
  CHECK(r.names("C5"));  // c and 0 become sigma-indistinguishable
}

TEST_CASE("sigma family of the wrong shape is a structural error") {
  FiniteAlgebra L = fixture("CHAIN3");
  L.sigma.pop_back();
  CHECK_THROWS_AS(check_lm_axioms(L), StructuralError);
}

TEST_CASE("Boolean centers of the fixtures") {
  FiniteAlgebra c3 = fixture("CHAIN3");
  CHECK(boolean_center(c3) == ElementSet::of(3, {0, 2}));

  FiniteAlgebra t2 = fixture("TRIV2");
  CHECK(boolean_center(t2) == ElementSet::all(2));

  // complemented elements of a grid power are the constant 0/1 grids
  FiniteAlgebra six = fixture("SIX");
  CHECK(boolean_center(six) == ElementSet::of(6, {six.bottom, six.top}));

  FiniteAlgebra prod = fixture("PROD");
  CHECK(boolean_center(prod).count() == 4);
}

TEST_CASE("the difference operation on CHAIN3") {
  FiniteAlgebra L = fixture("CHAIN3");
  const int zero = 0, c = 1, one = 2;
  CHECK(delta(L, c, c) == one);
  CHECK(delta(L, zero, c) == zero);
  // a + 1 = sigma_11(a)
  CHECK(delta(L, c, one) == L.sig(1, 1, c));
  CHECK(L.sig(1, 1, c) == zero);
}

TEST_CASE("difference laws hold exhaustively on every fixture") {
  std::vector<FiniteAlgebra> algebras;
  for (const std::string& name : fixture_names()) algebras.push_back(fixture(name));
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m)
      algebras.push_back(grid_power(two_element_boolean(), n, m));
  for (const FiniteAlgebra& L : algebras) {
    ElementSet center = boolean_center(L);
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        int d = delta(L, a, b);
        CHECK((d == L.top) == (a == b));                       // T1
        CHECK(delta(L, b, a) == d);                            // T2
        CHECK(L.mt(d, a) == L.mt(d, b));                       // T3
        if (b == L.top) CHECK(d == L.sig(1, 1, a));            // T4
        for (int i = 1; i < L.n; ++i)
          for (int j = 1; j < L.m; ++j) CHECK(L.sig(i, j, d) == d);  // T5
        CHECK(L.mt(d, L.ng(d)) == L.bottom);                   // T6
        CHECK(L.jn(d, L.ng(d)) == L.top);
        CHECK(center.contains(d));
      }
  }
}

TEST_CASE("implication on CHAIN3") {
  FiniteAlgebra L = fixture("CHAIN3");
  CHECK(implication(L, 0, 0) == 2);
  CHECK(implication(L, 2, 0) == 0);
  CHECK(implication(L, 1, 0) == 2);
}

TEST_CASE("Stone filters of CHAIN3 and TRIV2") {
  FiniteAlgebra c3 = fixture("CHAIN3");
  auto f3 = stone_filters(c3);
  REQUIRE(f3.size() == 2);
  CHECK(f3[0] == ElementSet::of(3, {2}));
  CHECK(f3[1] == ElementSet::all(3));

  FiniteAlgebra t2 = fixture("TRIV2");
  auto f2 = stone_filters(t2);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == ElementSet::of(2, {1}));
  CHECK(f2[1] == ElementSet::all(2));
}

TEST_CASE("every Stone filter contains the top and the family is a lattice") {
  for (const std::string& name : fixture_names()) {
    FiniteAlgebra L = fixture(name);
    auto filters = stone_filters(L);
    for (const ElementSet& f : filters) {
      CHECK(f.contains(L.top));
      for (const ElementSet& g : filters)
        CHECK(std::find(filters.begin(), filters.end(), f.intersect(g)) !=
              filters.end());
    }
  }
}

TEST_CASE("centering families") {
  FiniteAlgebra c3 = fixture("CHAIN3");
  auto fam3 = is_centred(c3);
  REQUIRE(fam3.has_value());
  CHECK(*fam3 == std::vector<int>{2, 1});  // c_11 = 1, c_21 = c

  FiniteAlgebra t2 = fixture("TRIV2");
  auto fam2 = is_centred(t2);
  REQUIRE(fam2.has_value());
  CHECK(*fam2 == std::vector<int>{1});

  // the two-element subalgebra viewed with n=3, m=2 has no c_21
  FiniteAlgebra b32 = two_element_lm(3, 2);
  CHECK(check_lm_axioms(b32).ok());
  CHECK_FALSE(is_centred(b32).has_value());

  CHECK(is_centred(fixture("SIX")).has_value());
  CHECK(is_centred(fixture("PROD")).has_value());
}

TEST_CASE("two-element grid powers satisfy the axioms up to carrier 20") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) {
      FiniteAlgebra L = grid_power(two_element_boolean(), n, m);
      CHECK(L.size() <= 20);
      CHECK(check_de_morgan(L).ok());
      CHECK(check_lm_axioms(L).ok());
    }
}

TEST_CASE("deductive closure matches the generated filter route") {
  for (const std::string& name : fixture_names()) {
    FiniteAlgebra L = fixture(name);
    for (int a = 0; a < L.size(); ++a) {
      ElementSet gen = ElementSet::of(L.size(), {a});
      ElementSet sig_gen = ElementSet::of(L.size(), {L.sig(1, 1, a)});
      CHECK(deductive_closure(L, gen) == filter_generated(L, sig_gen));
    }
    CHECK(deductive_closure(L, ElementSet::empty(L.size())) ==
          ElementSet::of(L.size(), {L.top}));
  }
}

TEST_CASE("relative pseudocomplements exist on finite distributive carriers") {
  FiniteAlgebra L = fixture("SIX");
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) {
      auto z = relative_pseudocomplement(L, x, y);
      REQUIRE(z.has_value());
      CHECK(L.le(L.mt(x, *z), y));
      for (int w = 0; w < L.size(); ++w)
        if (L.le(L.mt(x, w), y)) CHECK(L.le(w, *z));
    }
}

TEST_CASE("every single-entry table mutation trips a law") {
  for (const std::string& name : {std::string("TRIV2"), std::string("CHAIN3"),
                                  std::string("SIX")}) {
    FiniteAlgebra L = fixture(name);
    auto broken = [&](const FiniteAlgebra& M) {
      if (!validate_lattice(M.meet, M.join, M.leq).ok()) return true;
      if (!check_de_morgan(M).ok()) return true;
      if (!check_lm_axioms(M).ok()) return true;
      return !check_quantifier(M, *M.exists).ok();
    };
    for (size_t t = 0; t < L.sigma.size(); ++t)
      for (int x = 0; x < L.size(); ++x)
        for (int v = 0; v < L.size(); ++v) {
          if (v == L.sigma[t](x)) continue;
          FiniteAlgebra M = L;
          M.sigma[t].map[x] = v;
          CHECK(broken(M));
        }
    for (int x = 0; x < L.size(); ++x)
      for (int v = 0; v < L.size(); ++v) {
        if (v != L.ng(x)) {
          FiniteAlgebra M = L;
          M.neg.map[x] = v;
          CHECK(broken(M));
        }
        if (v != L.ex(x)) {
          FiniteAlgebra M = L;
          M.exists->map[x] = v;
          CHECK(broken(M));
        }
        for (int y = 0; y < L.size(); ++y) {
          if (v != L.mt(x, y)) {
            FiniteAlgebra M = L;
            M.meet.table[x][y] = v;
            CHECK(broken(M));
          }
          if (v != L.jn(x, y)) {
            FiniteAlgebra M = L;
            M.join.table[x][y] = v;
            CHECK(broken(M));
          }
        }
      }
  }
}

TEST_CASE("subalgebra extraction keeps tables consistent") {
  FiniteAlgebra L = fixture("PROD");
  ElementSet diag = ElementSet::empty(9);
  for (int a = 0; a < 3; ++a) diag.insert(a * 3 + a);
  Subalgebra sub = induced_subalgebra(L, diag, true);
  CHECK(sub.algebra->size() == 3);
  CHECK(check_lm_axioms(*sub.algebra).ok());
  for (int k = 0; k < 3; ++k) CHECK(sub.from_parent[sub.to_parent[k]] == k);

  Subalgebra center = boolean_subalgebra(L, boolean_center(L), true);
  CHECK(center.algebra->size() == 4);
  CHECK(center.algebra->n == 2);
  CHECK(check_lm_axioms(*center.algebra).ok());
}
