// duality.hpp -- finite monadic LM spaces, the prime-filter spectrum, the
// dual algebra of up-sets, round-trip isomorphism checks, and the
// correspondence between congruences and closed involutive semimodal
// saturated subsets.

#pragma once

#include "mlmw/core.hpp"

namespace mlmw {

/// Finite dual object: a poset of points with an order-reversing involution
/// g, a sigma-dual function family f_ij, and an equivalence E. The finite
/// topology is discrete, so "clopen increasing" means up-set and continuity
/// is vacuous.
struct MlmSpace {
  Carrier points;
  PosetTable leq;
  OpTable1 g;
  int n = 2, m = 2;
  std::vector<OpTable1> f;
  Partition E;

  int size() const { return points.size(); }
  int f_index(int i, int j) const { return (i - 1) * (m - 1) + (j - 1); }
  int fi(int i, int j, int x) const { return f[f_index(i, j)](x); }
  /// Saturation: union of the E-classes meeting the set.
  ElementSet saturate(const ElementSet& s) const;
  ElementSet preimage(int i, int j, const ElementSet& s) const;
  ElementSet g_preimage(const ElementSet& s) const;
  Report check_shape() const;
};

/// Finite forms of E1-E8 plus ml1 and ml3; ml2 is vacuous on finite discrete
/// spaces and reported as an auto-pass note.
Report check_mlm_space(const MlmSpace& X, const Caps& caps = {});

/// Algebra of up-sets with ~U = X minus g^{-1}(U), sigma_ij U = f_ij^{-1}(U),
/// exists U = the E-saturation of U. The result is validated against the
/// full axiom suite.
FiniteAlgebra dual_algebra(const MlmSpace& X, const Caps& caps = {});

/// Prime-filter spectrum: points are the prime filters of the lattice
/// reduct ordered by inclusion, with g_L(P) = {x : ~x not in P},
/// f_ij(P) = sigma_ij^{-1}(P), and P E Q iff P and Q trace the same set on
/// the quantifier range.
struct Spectrum {
  MlmSpace space;
  std::vector<ElementSet> point_filters;  // per point, the filter as a subset of L
  std::vector<ElementSet> sigma_map;      // per element a, {P : a in P}
};
Spectrum spectrum(const FiniteAlgebra& L, const Caps& caps = {});

/// sigma_L : L -> dual_algebra(spectrum(L)) as a bijective morphism
/// preserving the full signature.
struct RoundtripCertificate {
  AlgebraRef dual;
  Morphism iso;
  Report report;
};
RoundtripCertificate roundtrip_check(const AlgebraRef& L,
                                     const Caps& caps = {});

/// Point-level round trip X -> spectrum(dual_algebra(X)) via
/// x -> {U : x in U}.
Report space_roundtrip_check(const MlmSpace& X, const Caps& caps = {});

/// All closed involutive semimodal E-saturated subsets, the congruence
/// Theta(Y) of each, and the assertions that Y -> Theta(Y) is an
/// order-reversing bijection onto the congruence lattice with inverse
/// delta -> {P : [1]_delta subset of P}.
struct SemimodalAnalysis {
  Spectrum spec;
  std::vector<ElementSet> sets;
  std::vector<Partition> thetas;  // aligned with sets
  Report report;
};
SemimodalAnalysis closed_semimodal_sets(const FiniteAlgebra& L,
                                        const Caps& caps = {});

/// Theta(Y) = {(x,y) : sigma_L(x) and sigma_L(y) trace the same set on Y}.
Partition theta_of(const FiniteAlgebra& L, const Spectrum& spec,
                   const ElementSet& Y);

/// The point set of the principal congruence theta(a,b): both sides of the
/// set identity sigma_L(forall(a+b)) =
/// X minus the union over (i,j) of f_ij^{-1}(E-saturation of
/// sigma_L(b) minus sigma_L(a)) are computed and asserted equal, and
/// Theta of the result is asserted equal to theta(a,b).
struct PrincipalSubsetResult {
  ElementSet points;
  bool normalized = false;  // inputs were swapped to a <= b
  Report report;
};
PrincipalSubsetResult principal_subset(const FiniteAlgebra& L, int a, int b,
                                       const Caps& caps = {});

/// Backtracking search for a point bijection preserving order, g, every
/// f_ij, and E.
std::optional<std::vector<int>> find_space_isomorphism(const MlmSpace& A,
                                                       const MlmSpace& B);

}  // namespace mlmw
