// congruence.hpp -- ms-filters, R(F) congruences, the gamma diagram,
// simplicity, the discriminator polynomial, principal congruences and
// congruence counting, each cross-checked against an independent oracle.

#pragma once

#include "mlmw/core.hpp"

namespace mlmw {

/// Stone filter closed under the universal quantifier?
Report check_ms_filter(const FiniteAlgebra& L, const ElementSet& F);

/// All ms-filters in ascending mask order; independently recomputed as
/// monadic deductive systems at small sizes and asserted equal.
std::vector<ElementSet> ms_filters(const FiniteAlgebra& L,
                                   const Caps& caps = {});

/// R(F): x ~ y iff x ^ f = y ^ f for some f in F. Rejects non-ms-filters;
/// asserts compatibility with every operation.
Partition congruence_from_filter(const FiniteAlgebra& L, const ElementSet& F);

struct CongruenceLattice {
  std::vector<Partition> elements;  // canonically sorted
  int index_of(const Partition& p) const;
  bool order_le(int a, int b) const { return elements[a].refines(elements[b]); }
  int size() const { return static_cast<int>(elements.size()); }
};

/// {R(F) : F ms-filter}, asserted equal to the closure oracle's congruence
/// set, with the filter<->congruence maps asserted mutually inverse order
/// isomorphisms.
CongruenceLattice all_congruences(const FiniteAlgebra& L,
                                  const Caps& caps = {});

/// Congruence set generated by closing every element pair and joining,
/// independent of the filter route.
std::vector<Partition> oracle_congruences(const FiniteAlgebra& L);

/// Least ms-filter containing H, computed as the lattice filter generated by
/// {sigma_11 forall h} and asserted equal to the deductive closure of
/// forall H and to the intersection of all ms-filters containing H.
ElementSet monadic_ds_generated(const FiniteAlgebra& L, const ElementSet& H);

/// The four intersection maps between monadic deductive systems of L,
/// deductive systems of the range, monadic filters of the center, and
/// filters of the range's center: order isomorphisms forming a commuting
/// square.
struct GammaDiagram {
  std::vector<ElementSet> dm;          // monadic deductive systems of L
  std::vector<ElementSet> d_range;     // deductive systems of exists(L)
  std::vector<ElementSet> fm_center;   // monadic filters of B(L)
  std::vector<ElementSet> f_rcenter;   // filters of B(exists(L))
  Report report;
};
GammaDiagram gamma_diagram(const FiniteAlgebra& L, const Caps& caps = {});

/// Simplicity / subdirect irreducibility, decided four independent ways and
/// asserted to agree: |Con| = 2, the range simple as an LM-algebra, the
/// range's center two-element, and the existence of a monolith.
struct SimplicityCertificate {
  bool simple = false;
  bool degenerate = false;           // single-element algebra
  int range_center_size = 0;
  std::optional<Partition> monolith;             // least nontrivial congruence
  std::optional<Partition> proper_nontrivial;    // witness when not simple
};
SimplicityCertificate simplicity(const FiniteAlgebra& L, const Caps& caps = {});
bool is_simple(const FiniteAlgebra& L, const Caps& caps = {});
bool is_subdirectly_irreducible(const FiniteAlgebra& L, const Caps& caps = {});

/// p(x,y,z) = (forall(x+y) ^ z) v (~forall(x+y) ^ x).
int discriminator(const FiniteAlgebra& L, int x, int y, int z);

/// p(x,x,z) = z on any algebra; the full ternary discriminator behaviour on
/// simple algebras, over all triples.
Report certify_discriminator(const FiniteAlgebra& L, const Caps& caps = {});

/// Desk-scale consequences: congruence permutability and distributivity,
/// equationally definable principal congruences, factor congruences,
/// closure of principal congruences under join and meet.
Report discriminator_consequences(const FiniteAlgebra& L,
                                  const Caps& caps = {});

/// theta(a,b) by x ^ forall(a+b) = y ^ forall(a+b); asserted equal to the
/// closure oracle and to theta(forall(a+b), 1).
Partition principal_congruence(const FiniteAlgebra& L, int a, int b);

/// All principal congruences with the Boolean-lattice identities checked:
/// identity and total, the meet formula, complements, and the principal
/// ms-filter form F(forall sigma_11 a).
struct PrincipalLatticeResult {
  CongruenceLattice lattice;
  Report report;
};
PrincipalLatticeResult principal_lattice(const FiniteAlgebra& L,
                                         const Caps& caps = {});

/// 2^(number of atoms of B(exists L)), asserted equal to |Con|, plus the
/// atom lemma: F(forall sigma_11 a) maximal iff forall sigma_11 a is an atom.
struct CongruenceCount {
  long long count = 0;
  int atoms = 0;
  Report report;
};
CongruenceCount count_congruences(const FiniteAlgebra& L,
                                  const Caps& caps = {});

/// Elements of the Boolean center fixed by the quantifier, i.e. B(exists L)
/// as a subset of L.
ElementSet range_center(const FiniteAlgebra& L);

/// Congruence extension property spot check: every congruence of the
/// subalgebra on `members` is the restriction of a congruence of L.
Report cep_spot_check(const FiniteAlgebra& L, const ElementSet& members,
                      const Caps& caps = {});

}  // namespace mlmw
