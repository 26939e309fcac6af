// lm.hpp -- LM_{n x m} axiom suite C1-C7, Boolean center, the derived
// operations + and ->, Stone filters / deductive systems, centredness, and
// subalgebra extraction.

#pragma once

#include "mlmw/core.hpp"

namespace mlmw {

/// De Morgan reduct laws on top of the lattice laws: ~~x = x, the De Morgan
/// identities and the bound swaps.
Report check_de_morgan(const FiniteAlgebra& L);

/// Axioms C1-C7. Assumes the De Morgan reduct is already valid. C5 is
/// checked as injectivity of the joint sigma profile. Sigma family of the
/// wrong shape raises StructuralError.
Report check_lm_axioms(const FiniteAlgebra& L);

/// Set of complemented elements. Checked against the image of every
/// sigma_ij; a mismatch raises InternalCheckError.
ElementSet boolean_center(const FiniteAlgebra& L);

/// a + b, the big meet over all (i,j) of
/// (~s_ij(a) v s_ij(b)) ^ (~s_ij(b) v s_ij(a)).
int delta(const FiniteAlgebra& L, int a, int b);

/// x -> y = s_(n-1)(m-1)(~x) v y.
int implication(const FiniteAlgebra& L, int x, int y);

/// Lattice filter generated by a set of elements (the whole carrier's top
/// filter when empty).
ElementSet filter_generated(const FiniteAlgebra& L, const ElementSet& gens);

/// Deductive closure: contains top, contains gens, closed under modus
/// ponens for ->, iterated to fixpoint.
ElementSet deductive_closure(const FiniteAlgebra& L, const ElementSet& gens);

/// All Stone filters (lattice filters closed under sigma_11), canonical mask
/// order. Cross-checked against the deductive systems enumerated
/// independently via -> when the carrier is small enough; disagreement
/// raises InternalCheckError.
std::vector<ElementSet> stone_filters(const FiniteAlgebra& L,
                                      const Caps& caps = {});

/// All modus-ponens-closed subsets containing top, by subset scan.
/// Exponential; guarded by caps.carrier and an internal subset bound.
std::vector<ElementSet> deductive_systems(const FiniteAlgebra& L,
                                          const Caps& caps = {});

/// Centering family c_ij (row-major), each the lattice-least element whose
/// sigma profile is the indicator of the up-set of (i,j); empty optional when
/// some (i,j) has no such element.
std::optional<std::vector<int>> is_centred(const FiniteAlgebra& L);

/// Greatest z with x ^ z <= y, if it exists.
std::optional<int> relative_pseudocomplement(const FiniteAlgebra& L, int x,
                                             int y);

/// Subalgebra on a subset closed under the kept operations, with index maps
/// in both directions. Non-closure raises InternalCheckError.
struct Subalgebra {
  AlgebraRef algebra;
  std::vector<int> to_parent;    // new index -> parent index
  std::vector<int> from_parent;  // parent index -> new index or -1
};

Subalgebra induced_subalgebra(const FiniteAlgebra& L, const ElementSet& members,
                              bool keep_exists);

/// Same, but reshaped as a Boolean algebra: n = m = 2 with sigma_11 = id.
/// Every member must be complemented in L.
Subalgebra boolean_subalgebra(const FiniteAlgebra& L, const ElementSet& members,
                              bool keep_exists);

/// Principal up-set of a as a filter mask.
ElementSet principal_filter(const FiniteAlgebra& L, int a);

}  // namespace mlmw
