// quantifier.hpp -- existential quantifier axioms, the derived-law battery,
// the Moore-family correspondence in both directions, and exhaustive
// quantifier enumeration.

#pragma once

#include "mlmw/core.hpp"

namespace mlmw {

/// Axioms e1-e4 for a candidate quantifier table.
Report check_quantifier(const FiniteAlgebra& L, const OpTable1& q);

/// Derived laws e9-e24 (theorems when e1-e4 hold); a failure indicates an
/// internal error and is reported as such.
Report derived_law_suite(const FiniteAlgebra& L, const OpTable1& q);

/// Universal-quantifier axioms e5-e8 for the view forall x = ~q(~x).
Report check_universal_view(const FiniteAlgebra& L, const OpTable1& q);

/// The range q(L) together with the four range conditions: Moore closure,
/// subalgebra, sigma-infimum exchange, relative pseudocomplement closure.
struct RangeProfile {
  ElementSet range;
  Report report;
};
RangeProfile range_profile(const FiniteAlgebra& L, const OpTable1& q);

/// The converse conditions (i)-(iv) on a subset: Moore family, subalgebra,
/// sigma-infimum exchange, existence and membership of all relative
/// pseudocomplements between members.
Report check_moore_family(const FiniteAlgebra& L, const ElementSet& M);

/// Quantifier induced by a qualifying Moore family via least upper members.
/// Throws RejectedInput naming the failed condition otherwise.
OpTable1 quantifier_from_moore_family(const FiniteAlgebra& L,
                                      const ElementSet& M);

/// All subsets passing check_moore_family, ascending mask order.
std::vector<ElementSet> moore_families(const FiniteAlgebra& L,
                                       const Caps& caps = {});

/// All quantifiers, enumerated twice -- brute force over unary tables and
/// through qualifying Moore families -- and asserted equal. Lexicographic
/// table order.
std::vector<OpTable1> enumerate_quantifiers(const FiniteAlgebra& L,
                                            const Caps& caps = {});

/// Subsets passing conditions (i), (ii), (iv) but failing (iii); recorded
/// because the Moore-family correspondence is only a partial converse.
std::vector<ElementSet> partial_converse_gaps(const FiniteAlgebra& L,
                                              const Caps& caps = {});

}  // namespace mlmw
