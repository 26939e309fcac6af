#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mlmw/congruence.hpp"
#include "mlmw/duality.hpp"
#include "mlmw/fixtures.hpp"
#include "mlmw/lm.hpp"
#include "mlmw/quantifier.hpp"
#include "mlmw/representation.hpp"

using namespace mlmw;

namespace {

std::vector<FiniteAlgebra> fixture_variants() {
  std::vector<FiniteAlgebra> out;
  for (const std::string& name : fixture_names()) {
    FiniteAlgebra L = fixture(name);
    for (const OpTable1& q : enumerate_quantifiers(L))
      out.push_back(with_quantifier(L, q));
  }
  return out;
}

bool same_tables(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  return A.size() == B.size() && A.n == B.n && A.m == B.m &&
         A.meet == B.meet && A.join == B.join && A.neg == B.neg &&
         A.sigma == B.sigma && A.exists == B.exists &&
         A.bottom == B.bottom && A.top == B.top;
}

}  // namespace

TEST_CASE("grid powers of the two-element algebra are the fixtures") {
  CHECK(same_tables(grid_power(two_element_boolean(), 3, 2), fixture("CHAIN3")));
  CHECK(same_tables(grid_power(two_element_boolean(), 2, 2), fixture("TRIV2")));
  FiniteAlgebra six = grid_power(two_element_boolean(), 3, 3);
  CHECK(six.size() == 6);
  CHECK(same_tables(six, fixture("SIX")));
}

TEST_CASE("grid power counts monotone maps") {
  FiniteAlgebra b4 = *boolean_subalgebra(fixture("PROD"),
                                         boolean_center(fixture("PROD")), true)
                          .algebra;
  CHECK(grid_power(b4, 3, 2).size() == 9);
  CHECK(grid_power(two_element_boolean(), 4, 4).size() == 20);
}

TEST_CASE("grid power refuses above the carrier cap") {
  Caps caps;
  caps.carrier = 5;
  CHECK_THROWS_AS(grid_power(two_element_boolean(), 3, 3, caps), CapExceeded);
}

TEST_CASE("grid power rejects a non-Boolean base") {
  CHECK_THROWS_AS(grid_power(fixture("CHAIN3"), 2, 2), RejectedInput);
}

TEST_CASE("tau embeds CHAIN3 with the expected grid for c") {
  AlgebraRef L = share(fixture("CHAIN3"));
  TauResult tau = tau_embedding(L);
  CHECK(tau.report.ok());
  CHECK(tau.surjective);
  // tau(c) is the grid [sigma_11 c, sigma_21 c] = [0,1]
  CHECK(tau.target->name(tau.tau(1)) == "[0,1]");
}

TEST_CASE("tau on TRIV2 is the identity up to renaming") {
  AlgebraRef L = share(fixture("TRIV2"));
  TauResult tau = tau_embedding(L);
  CHECK(tau.report.ok());
  CHECK(tau.surjective);
  CHECK(tau.tau.map == std::vector<int>{0, 1});
}

TEST_CASE("tau is bijective exactly on centred algebras") {
  for (const std::string& name : fixture_names()) {
    AlgebraRef L = share(fixture(name));
    TauResult tau = tau_embedding(L);
    CHECK(tau.report.ok());
    CHECK(tau.tau.is_injective());
    CHECK(tau.surjective == is_centred(*L).has_value());
    CHECK(tau.surjective);  // all four canonical fixtures are centred
  }
  // the two-element carrier with the (3,2) signature is not centred
  AlgebraRef B = share(two_element_lm(3, 2));
  TauResult tau = tau_embedding(B);
  CHECK(tau.report.ok());
  CHECK_FALSE(tau.surjective);
  CHECK(tau.target->size() == 3);
}

TEST_CASE("tau commutes with the quantifier on every variant") {
  for (const FiniteAlgebra& L : fixture_variants()) {
    TauResult tau = tau_embedding(share(L));
    CHECK(tau.report.ok());  // includes exists preservation
  }
}

TEST_CASE("functional powers") {
  // a single index makes the join quantifier the identity
  FiniteAlgebra p1 = functional_power(two_element_boolean(), 3, 2, 1);
  CHECK(p1.size() == 3);
  CHECK(*p1.exists == identity_table(3));

  // two indices over the 3-grid give the product with the diagonal quantifier
  FiniteAlgebra p2 = functional_power(two_element_boolean(), 3, 2, 2);
  CHECK(p2.size() == 9);
  CHECK(find_algebra_isomorphism(p2, fixture("PROD"), Signature::mlm())
            .has_value());

  // constant tuples are fixed by the quantifier
  for (int x = 0; x < p2.size(); ++x)
    CHECK(p2.ex(p2.ex(x)) == p2.ex(x));
}

TEST_CASE("constants of the fixtures") {
  AlgebraRef c3 = share(fixture("CHAIN3"));
  auto cs = constants(c3);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].map == std::vector<int>{0, 1, 2});
  CHECK(is_rich(c3));

  AlgebraRef prod = share(fixture("PROD"));
  auto cp = constants(prod);
  // the two component projections onto the diagonal
  std::vector<int> proj1(9), proj2(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      proj1[a * 3 + b] = a * 3 + a;
      proj2[a * 3 + b] = b * 3 + b;
    }
  bool has1 = false, has2 = false;
  for (const Morphism& c : cp) {
    has1 = has1 || c.map == proj1;
    has2 = has2 || c.map == proj2;
  }
  CHECK(has1);
  CHECK(has2);
  CHECK(is_rich(prod));
}

TEST_CASE("the identity is a constant exactly when the quantifier is trivial") {
  for (const FiniteAlgebra& L : fixture_variants()) {
    bool id_constant = false;
    for (const Morphism& c : constants(share(L)))
      id_constant = id_constant || c.map == identity_table(L.size()).map;
    CHECK(id_constant == (*L.exists == identity_table(L.size())));
  }
}

TEST_CASE("witnesses pick out the constants fixing the quantifier value") {
  AlgebraRef prod = share(fixture("PROD"));
  // witness for (c,0): a constant with c((c,0)) = (c,c)
  auto ws = witnesses(prod, 3);
  CHECK(!ws.empty());
  for (const Morphism& w : ws) CHECK(w(3) == prod->ex(3));
}

TEST_CASE("omega embeds every rich fixture") {
  AlgebraRef c3 = share(fixture("CHAIN3"));
  OmegaResult om = omega_embedding(c3);
  CHECK(om.report.ok());
  CHECK(om.consts.size() == 1);
  CHECK(om.target->size() == 3);  // range^1
  CHECK(om.omega.map == std::vector<int>{0, 1, 2});

  AlgebraRef prod = share(fixture("PROD"));
  OmegaResult omp = omega_embedding(prod);
  CHECK(omp.report.ok());
  CHECK(omp.consts.size() == 2);
  CHECK(omp.target->size() == 9);
  // omega(1) is the constant-1 tuple, i.e. the top of the power
  CHECK(omp.omega(prod->top) == omp.target->top);
}

TEST_CASE("omega values evaluate the constants") {
  AlgebraRef prod = share(fixture("PROD"));
  OmegaResult om = omega_embedding(prod);
  REQUIRE(om.consts.size() == 2);
  // Omega((a,b)) lists the two projections, in the constant ordering
  for (int x = 0; x < 9; ++x) {
    int t = om.omega(x);
    int second = t % om.range.algebra->size();
    int first = t / om.range.algebra->size();
    CHECK(om.range.to_parent[first] == om.consts[0](x));
    CHECK(om.range.to_parent[second] == om.consts[1](x));
  }
}

TEST_CASE("a desk-scale scan finds no non-rich algebra") {
  // Fixtures, chains, and small products, under every quantifier each
  // admits. Recorded outcome: every instance in this space is rich.
  std::vector<FiniteAlgebra> pool = fixture_variants();
  FiniteAlgebra chain4 = grid_power(two_element_boolean(), 4, 2);
  FiniteAlgebra mixed = product(fixture("CHAIN3"), two_element_lm(3, 2));
  for (FiniteAlgebra base : {chain4, mixed})
    for (const OpTable1& q : enumerate_quantifiers(base))
      pool.push_back(with_quantifier(base, q));
  for (const FiniteAlgebra& L : pool) CHECK(is_rich(share(L)));
}

TEST_CASE("psi refuses a constant set that witnesses nothing") {
  AlgebraRef L = share(fixture("PROD"));
  Subalgebra center = boolean_subalgebra(*L, boolean_center(*L), true);
  std::vector<int> embed(L->size(), -1);
  for (int x = 0; x < L->size(); ++x) embed[x] = center.from_parent[x];
  CHECK_THROWS_AS(psi_embedding(L, center.algebra, embed, {}), RejectedInput);
}

TEST_CASE("psi embeds using the Boolean center when it is rich") {
  AlgebraRef c3 = share(fixture("CHAIN3"));
  PsiResult psi = psi_embedding(c3);
  CHECK(psi.report.ok());
  REQUIRE(psi.consts.size() == 1);
  // Psi(c) maps the only constant to the grid [0,1]
  CHECK(psi.values[1][0] == std::vector<int>{0, 1});

  AlgebraRef t2 = share(fixture("TRIV2"));
  PsiResult psit = psi_embedding(t2);
  CHECK(psit.report.ok());
  // Boolean case: the functional representation over one constant
  CHECK(psit.consts.size() == 1);
  CHECK(psit.psi.is_injective());

  AlgebraRef prod = share(fixture("PROD"));
  PsiResult psip = psi_embedding(prod);
  CHECK(psip.report.ok());
  CHECK(psip.consts.size() == 2);
  // Psi(0) sends every constant to the all-zero grid
  for (const auto& grid : psip.values[prod->bottom])
    for (int v : grid) CHECK(v == psip.b_rich->bottom);
}

TEST_CASE("psi and omega hold for every fixture variant") {
  for (const FiniteAlgebra& L : fixture_variants()) {
    AlgebraRef R = share(L);
    CHECK(omega_embedding(R).report.ok());
    CHECK(psi_embedding(R).report.ok());
  }
}

TEST_CASE("richness via quotient filters agrees with the witness route") {
  AlgebraRef c3 = share(fixture("CHAIN3"));
  RichnessResult r3 = richness_via_filters(c3);
  CHECK(r3.rich);
  for (int x = 0; x < 3; ++x) {
    REQUIRE(r3.b_for[x].has_value());
    CHECK(*r3.b_for[x] == 2);  // b = 1 works everywhere when exists = id
  }

  AlgebraRef prod = share(fixture("PROD"));
  RichnessResult rp = richness_via_filters(prod);
  CHECK(rp.rich);
  // x = (c,0): b = (1,0) restricts the diagonal bijectively onto [0,(1,0)]
  REQUIRE(rp.b_for[3].has_value());
  FiniteAlgebra P = fixture("PROD");
  int b = *rp.b_for[3];
  CHECK(P.mt(P.ex(3), b) == P.mt(3, b));

  for (const FiniteAlgebra& L : fixture_variants())
    CHECK(richness_via_filters(share(L)).rich == is_rich(share(L)));
}

TEST_CASE("interval algebras") {
  AlgebraRef L = share(fixture("PROD"));
  // [0,1] is the algebra itself
  IntervalResult full = interval_algebra(L, L->top);
  CHECK(full.algebra->size() == 9);
  CHECK(full.h.map == identity_table(9).map);

  // [0,0] is the one-element algebra
  IntervalResult zero = interval_algebra(L, L->bottom);
  CHECK(zero.algebra->size() == 1);

  // [0,(1,0)] is a three-element chain isomorphic to CHAIN3's reduct
  IntervalResult half = interval_algebra(L, 6);
  CHECK(half.algebra->size() == 3);
  FiniteAlgebra c3 = fixture("CHAIN3");
  c3.exists.reset();
  CHECK(find_algebra_isomorphism(*half.algebra, c3, Signature::lm())
            .has_value());

  // non-Boolean bounds are rejected
  CHECK_THROWS_AS(interval_algebra(L, 4), RejectedInput);
}

TEST_CASE("the commuting diagram holds on every rich fixture") {
  for (const FiniteAlgebra& L : fixture_variants())
    CHECK(commuting_diagram_check(share(L)).ok());
}

TEST_CASE("constant laws follow from the defining pair") {
  for (const FiniteAlgebra& L : fixture_variants())
    for (const Morphism& c : constants(share(L)))
      for (int x = 0; x < L.size(); ++x) {
        CHECK(c(c(x)) == c(x));
        CHECK(L.le(c(x), L.ex(x)));
      }
}

TEST_CASE("grid powers are finitely complete") {
  FiniteAlgebra G = grid_power(two_element_boolean(), 3, 3);
  // every subset has a meet and join inside the algebra: fold over masks
  for (uint64_t mask = 1; mask < (uint64_t{1} << G.size()); ++mask) {
    int mt = G.top, jn = G.bottom;
    for (int x = 0; x < G.size(); ++x)
      if ((mask >> x) & 1u) {
        mt = G.mt(mt, x);
        jn = G.jn(jn, x);
      }
    CHECK(mt >= 0);
    CHECK(jn < G.size());
  }
}

TEST_CASE("the grid over the four-element center runs the whole battery") {
  // 9-element algebra with an entrywise quantifier that is neither the
  // identity nor a diagonal join: grids over B(PROD) with its restricted
  // (simple) quantifier.
  Subalgebra b4 = boolean_subalgebra(fixture("PROD"),
                                     boolean_center(fixture("PROD")), true);
  AlgebraRef L = share(grid_power(*b4.algebra, 3, 2));
  REQUIRE(L->size() == 9);
  REQUIRE(L->has_exists());
  CHECK(*L->exists != identity_table(9));
  CHECK(check_lm_axioms(*L).ok());
  CHECK(check_quantifier(*L, *L->exists).ok());
  CHECK(derived_law_suite(*L, *L->exists).ok());

  // simple: the range's center is trivial
  CHECK(range_center(*L).count() == 2);
  CHECK(all_congruences(*L).size() == 2);
  CHECK(is_simple(*L));
  CHECK(certify_discriminator(*L).ok());
  CHECK(discriminator_consequences(*L).ok());
  CHECK(gamma_diagram(*L).report.ok());
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      CHECK(principal_congruence(*L, a, b) == congruence_closure(*L, {{a, b}}));
      CHECK(principal_subset(*L, a, b).report.ok());
    }

  CHECK(roundtrip_check(L).report.ok());
  CHECK(closed_semimodal_sets(*L).report.ok());
  CHECK(space_roundtrip_check(spectrum(*L).space).ok());

  TauResult tau = tau_embedding(L);
  CHECK(tau.report.ok());
  CHECK(tau.surjective == is_centred(*L).has_value());
  CHECK(is_rich(L));
  CHECK(richness_via_filters(L).rich);
  CHECK(omega_embedding(L).report.ok());
  CHECK(psi_embedding(L).report.ok());
  CHECK(commuting_diagram_check(L).ok());
}

TEST_CASE("a larger identity-quantifier grid exercises the duality at "
          "carrier ten") {
  AlgebraRef L = share(grid_power(two_element_boolean(), 4, 3));
  REQUIRE(L->size() == 10);
  CHECK(all_congruences(*L).size() == 2);
  CHECK(roundtrip_check(L).report.ok());
  CHECK(closed_semimodal_sets(*L).report.ok());
  CHECK(commuting_diagram_check(L).ok());
}

TEST_CASE("the join of the omega image values is the quantifier value") {
  for (const FiniteAlgebra& L : fixture_variants()) {
    auto cs = constants(share(L));
    for (int x = 0; x < L.size(); ++x) {
      int j = L.bottom;
      for (const Morphism& c : cs) j = L.jn(j, c(x));
      CHECK(j == L.ex(x));
    }
  }
}
