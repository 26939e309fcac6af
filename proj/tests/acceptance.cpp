// Acceptance suite: one pass/fail line per criterion, all discrete checks at
// tolerance zero. Exits nonzero if any criterion fails. The CLI binary path
// arrives as argv[1] and is used by the last criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mlmw/congruence.hpp"
#include "mlmw/duality.hpp"
#include "mlmw/fixtures.hpp"
#include "mlmw/io.hpp"
#include "mlmw/lm.hpp"
#include "mlmw/quantifier.hpp"
#include "mlmw/representation.hpp"

using namespace mlmw;

namespace {

std::string g_binary;
std::ostringstream g_why;

#define ACCEPT_CHECK(cond)                                        \
  do {                                                            \
    if (!(cond)) {                                                \
      g_why << "  failed: " << #cond << "\n";                     \
      return false;                                               \
    }                                                             \
  } while (0)

std::vector<FiniteAlgebra> fixtures_all() {
  std::vector<FiniteAlgebra> out;
  for (const std::string& name : fixture_names()) out.push_back(fixture(name));
  return out;
}

std::vector<FiniteAlgebra> fixture_variants() {
  std::vector<FiniteAlgebra> out;
  for (const FiniteAlgebra& L : fixtures_all())
    for (const OpTable1& q : enumerate_quantifiers(L))
      out.push_back(with_quantifier(L, q));
  return out;
}

// --- criterion 1: axiom suites ---------------------------------------------
bool criterion_axiom_suites() {
  std::vector<FiniteAlgebra> pool = fixtures_all();
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m)
      pool.push_back(grid_power(two_element_boolean(), n, m));
  for (const FiniteAlgebra& L : pool) {
    ACCEPT_CHECK(L.size() <= 20);
    ACCEPT_CHECK(check_de_morgan(L).ok());
    ACCEPT_CHECK(check_lm_axioms(L).ok());
    ElementSet center = boolean_center(L);
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        int d = delta(L, a, b);
        ACCEPT_CHECK((d == L.top) == (a == b));            // T1
        ACCEPT_CHECK(delta(L, b, a) == d);                 // T2
        ACCEPT_CHECK(L.mt(d, a) == L.mt(d, b));            // T3
        if (b == L.top) ACCEPT_CHECK(d == L.sig(1, 1, a)); // T4
        for (int i = 1; i < L.n; ++i)
          for (int j = 1; j < L.m; ++j)
            ACCEPT_CHECK(L.sig(i, j, d) == d);             // T5
        ACCEPT_CHECK(L.mt(d, L.ng(d)) == L.bottom);        // T6
        ACCEPT_CHECK(L.jn(d, L.ng(d)) == L.top);
        ACCEPT_CHECK(center.contains(d));
      }
    ACCEPT_CHECK(L.has_exists());
    ACCEPT_CHECK(check_quantifier(L, *L.exists).ok());     // e1-e4
    ACCEPT_CHECK(derived_law_suite(L, *L.exists).ok());    // e9-e24
  }
  return true;
}

// --- criterion 2: quantifier correspondence --------------------------------
bool criterion_quantifier_correspondence() {
  std::vector<FiniteAlgebra> pool = fixtures_all();
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) {
      FiniteAlgebra G = grid_power(two_element_boolean(), n, m);
      if (G.size() <= 9) pool.push_back(G);
    }
  for (const FiniteAlgebra& L : pool) {
    if (L.size() > 9) continue;
    // enumerate_quantifiers asserts internally that the brute-force route
    // equals the Moore-family route element for element
    std::vector<OpTable1> qs = enumerate_quantifiers(L);
    std::vector<ElementSet> families = moore_families(L);
    ACCEPT_CHECK(qs.size() == families.size());
    for (size_t k = 0; k < families.size(); ++k) {
      OpTable1 q = quantifier_from_moore_family(L, families[k]);
      bool found = false;
      for (const OpTable1& other : qs) found = found || other == q;
      ACCEPT_CHECK(found);
    }
  }
  ACCEPT_CHECK(enumerate_quantifiers(fixture("CHAIN3")).size() == 1);
  return true;
}

// --- criterion 3: congruence engine -----------------------------------------
bool criterion_congruence_engine() {
  for (const FiniteAlgebra& L : fixture_variants()) {
    // all_congruences asserts {R(F)} equals the closure oracle and that the
    // two maps are mutually inverse order isomorphisms
    CongruenceLattice lat = all_congruences(L);
    CongruenceCount count = count_congruences(L);
    ACCEPT_CHECK(count.report.ok());
    ACCEPT_CHECK(count.count == lat.size());
  }
  ACCEPT_CHECK(all_congruences(fixture("CHAIN3")).size() == 2);
  ACCEPT_CHECK(all_congruences(fixture("PROD")).size() == 2);
  ACCEPT_CHECK(all_congruences(with_identity_quantifier(fixture("PROD"))).size() ==
               4);
  return true;
}

// --- criterion 4: discriminator ---------------------------------------------
bool criterion_discriminator() {
  for (const FiniteAlgebra& L : fixture_variants()) {
    SimplicityCertificate cert = simplicity(L);
    if (cert.simple) {
      for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y)
          for (int z = 0; z < L.size(); ++z)
            ACCEPT_CHECK(discriminator(L, x, y, z) == (x == y ? z : x));
    }
    ACCEPT_CHECK(certify_discriminator(L).ok());
    if (L.size() <= 9) {
      for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
          Partition theta = principal_congruence(L, a, b);
          for (int c = 0; c < L.size(); ++c)
            for (int d = 0; d < L.size(); ++d)
              ACCEPT_CHECK(theta.same(c, d) == (discriminator(L, a, b, c) ==
                                                discriminator(L, a, b, d)));
        }
    }
  }
  return true;
}

// --- criterion 5: principal congruences -------------------------------------
bool criterion_principal() {
  for (const FiniteAlgebra& L : fixture_variants()) {
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b)
        ACCEPT_CHECK(principal_congruence(L, a, b) ==
                     congruence_closure(L, {{a, b}}));
    PrincipalLatticeResult res = principal_lattice(L);
    ACCEPT_CHECK(res.report.ok());
  }
  return true;
}

// --- criterion 6: duality ----------------------------------------------------
bool criterion_duality() {
  for (const FiniteAlgebra& L : fixture_variants()) {
    RoundtripCertificate cert = roundtrip_check(share(L));
    ACCEPT_CHECK(cert.report.ok());
    ACCEPT_CHECK(cert.iso.is_bijective());
    SemimodalAnalysis an = closed_semimodal_sets(L);
    ACCEPT_CHECK(an.report.ok());
    ACCEPT_CHECK(an.sets.size() == static_cast<size_t>(all_congruences(L).size()));
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b)
        ACCEPT_CHECK(principal_subset(L, a, b).report.ok());
  }
  return true;
}

// --- criterion 7: representation ---------------------------------------------
bool criterion_representation() {
  for (const FiniteAlgebra& L : fixture_variants()) {
    TauResult tau = tau_embedding(share(L));
    ACCEPT_CHECK(tau.report.ok());
    ACCEPT_CHECK(tau.tau.is_injective());
    ACCEPT_CHECK(tau.surjective == is_centred(L).has_value());
  }
  for (const std::string& name : {std::string("CHAIN3"), std::string("TRIV2"),
                                  std::string("SIX")}) {
    TauResult tau = tau_embedding(share(fixture(name)));
    ACCEPT_CHECK(tau.surjective);
  }
  {
    TauResult tau = tau_embedding(share(two_element_lm(3, 2)));
    ACCEPT_CHECK(tau.report.ok());
    ACCEPT_CHECK(!tau.surjective);
  }
  for (const FiniteAlgebra& L : fixture_variants()) {
    AlgebraRef R = share(L);
    bool rich = is_rich(R);
    RichnessResult rf = richness_via_filters(R);
    ACCEPT_CHECK(rf.rich == rich);
    if (rich) {
      ACCEPT_CHECK(omega_embedding(R).report.ok());
      ACCEPT_CHECK(psi_embedding(R).report.ok());
      ACCEPT_CHECK(commuting_diagram_check(R).ok());
    }
  }
  return true;
}

// --- criterion 8: CLI ----------------------------------------------------------
struct RunResult {
  int exit_code;
  std::string output;
};

void sh(const std::string& cmd) {
  if (std::system(cmd.c_str()) != 0) std::cout << "shell failed: " << cmd << "\n";
}

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool criterion_cli() {
  ACCEPT_CHECK(!g_binary.empty());
  const std::string dir = "acceptance_tmp";
  sh("rm -rf " + dir + " && mkdir -p " + dir);
  for (const std::string& name : fixture_names()) {
    std::string path = dir + "/" + name + ".alg";
    ACCEPT_CHECK(run("fixture " + name + " -o " + path).exit_code == 0);

    // byte-exact round trip through parse and emit
    FiniteAlgebra L = fixture(name);
    AlgebraDocument doc = document_from_algebra(L, {{"fixture", name}});
    std::string text = emit_algebra_document(doc);
    ACCEPT_CHECK(parse_algebra_document(text) == doc);
    ACCEPT_CHECK(emit_algebra_document(parse_algebra_document(text)) == text);

    RunResult trace = run("trace " + path);
    ACCEPT_CHECK(trace.exit_code == 0);
    ACCEPT_CHECK(trace.output.find(": fail") == std::string::npos);
  }
  // corrupted-input regressions and their exit codes
  {
    RunResult fx = run("fixture CHAIN3 -o " + dir + "/c3.alg");
    ACCEPT_CHECK(fx.exit_code == 0);
    RunResult ok = run("check " + dir + "/c3.alg");
    ACCEPT_CHECK(ok.exit_code == 0);
    sh("sed 's/sigma 2 1 : 0 2 2/sigma 2 1 : 0 0 2/' " + dir + "/c3.alg > " +
       dir + "/bad.alg");
    RunResult bad = run("check " + dir + "/bad.alg");
    ACCEPT_CHECK(bad.exit_code == 1);
    ACCEPT_CHECK(bad.output.find("C5") != std::string::npos);
    sh("head -c 40 " + dir + "/c3.alg > " + dir + "/trunc.alg");
    ACCEPT_CHECK(run("check " + dir + "/trunc.alg").exit_code == 2);
    ACCEPT_CHECK(run("--cap-carrier 2 quantifiers " + dir + "/c3.alg").exit_code ==
                 3);
    RunResult cong = run("congruences " + dir + "/c3.alg");
    ACCEPT_CHECK(cong.output.find("congruences=2 atoms=1") != std::string::npos);
  }
  sh("rm -rf " + dir);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];
  struct Criterion {
    const char* name;
    std::function<bool()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"axiom-suites", criterion_axiom_suites},
      {"quantifier-correspondence", criterion_quantifier_correspondence},
      {"congruence-engine", criterion_congruence_engine},
      {"discriminator", criterion_discriminator},
      {"principal-congruences", criterion_principal},
      {"duality", criterion_duality},
      {"representation", criterion_representation},
      {"cli", criterion_cli},
  };
  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    g_why.str("");
    auto begin = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = criteria[k].fn();
    } catch (const std::exception& e) {
      error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - begin)
                  .count();
    std::cout << "criterion " << k + 1 << " " << criteria[k].name << ": "
              << (ok ? "PASS" : "FAIL") << " (" << ms << " ms)\n";
    if (!ok) {
      ++failures;
      if (!error.empty()) std::cout << "  exception: " << error << "\n";
      std::cout << g_why.str();
    }
  }
  return failures == 0 ? 0 : 1;
}
