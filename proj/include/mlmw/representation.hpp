// representation.hpp -- monotone grid powers, the tau / omega / psi
// embeddings, constants and richness, interval algebras, and the commuting
// diagram connecting the three functional representations.

#pragma once

#include "mlmw/core.hpp"
#include "mlmw/lm.hpp"

namespace mlmw {

/// All monotone maps {1..n-1} x {1..m-1} -> B as value vectors in row-major
/// order, lexicographically sorted.
std::vector<std::vector<int>> monotone_grids(const FiniteAlgebra& B, int n,
                                             int m, const Caps& caps = {});

/// Algebra of monotone maps {1..n-1} x {1..m-1} -> B for a Boolean algebra B
/// (optionally monadic). Pointwise meet/join, (~f)(i,j) = (f(n-i,m-j))',
/// (sigma_ij f) constant at f(i,j), exists applied entrywise when B has one.
FiniteAlgebra grid_power(const FiniteAlgebra& B, int n, int m,
                         const Caps& caps = {});

/// Power base^k with componentwise operations and the quantifier sending a
/// tuple to the constant tuple at the join of its entries.
FiniteAlgebra power_with_join_quantifier(const FiniteAlgebra& base, int k,
                                         const Caps& caps = {});

/// tau(x)(i,j) = sigma_ij x, an embedding of L into the grid power of its
/// Boolean center; surjective exactly when L is centred.
struct TauResult {
  Subalgebra center;  // B(L) as a Boolean algebra
  AlgebraRef target;  // grid power of the center
  Morphism tau;
  bool surjective = false;
  Report report;
};
TauResult tau_embedding(const AlgebraRef& L, const Caps& caps = {});

/// All maps from an index set of the given size into grid_power(B,n,m), with
/// the quantifier sending a map to the constant map at the join of its
/// values.
FiniteAlgebra functional_power(const FiniteAlgebra& B, int n, int m,
                               int index_count, const Caps& caps = {});

/// Constants: endomorphisms c of the unquantified reduct with
/// c(exists x) = exists x and exists(c x) = c x. The laws c o c = c and
/// c(x) <= exists x are asserted for every constant found.
std::vector<Morphism> constants(const AlgebraRef& L, const Caps& caps = {});

/// Constants witnessing x, i.e. with c(x) = exists x.
std::vector<Morphism> witnesses(const AlgebraRef& L, int x,
                                const Caps& caps = {});

/// Every element has a witness.
bool is_rich(const AlgebraRef& L, const Caps& caps = {});

/// Omega(x)(c) = c(x) into the power of the quantifier range over the full
/// constant set. Refuses on non-rich input, naming an unwitnessed element.
struct OmegaResult {
  Subalgebra range;              // exists(L) as a subalgebra
  AlgebraRef target;             // range^X with the join quantifier
  std::vector<Morphism> consts;  // the index set X
  Morphism omega;
  Report report;
};
OmegaResult omega_embedding(const AlgebraRef& L, const Caps& caps = {});

/// Psi(x)(c)(i,j) = c(incl(sigma_ij x)) into ((exists B)grid)^X for a rich
/// monadic Boolean algebra B containing B(L). The constant set X must
/// witness every element of B.
struct PsiResult {
  AlgebraRef b_rich;
  Subalgebra b_range;            // exists(B) inside B
  AlgebraRef target;             // functional power over exists(B)
  std::vector<Morphism> consts;  // the index set X, constants of B
  Morphism psi;
  /// psi image values as B_rich indices, indexed [x][constant][grid cell];
  /// used by the commuting-diagram check.
  std::vector<std::vector<std::vector<int>>> values;
  Report report;
};
/// center_embedding maps each element of B(L) (by its L index) to its image
/// in B_rich, -1 off the center.
PsiResult psi_embedding(const AlgebraRef& L, const AlgebraRef& B_rich,
                        const std::vector<int>& center_embedding,
                        std::vector<Morphism> consts, const Caps& caps = {});
/// Convenience form: B rich = B(L) with its restricted quantifier, identity
/// inclusion, all constants.
PsiResult psi_embedding(const AlgebraRef& L, const Caps& caps = {});

/// Richness by quotient filters: for each x search b in B(L) such that
/// h_b restricted to the quantifier range is an isomorphism onto [0,b] and
/// h_b(exists x) = h_b(x). Verdict is asserted equal to is_rich.
struct RichnessResult {
  bool rich = false;
  std::vector<std::optional<int>> b_for;  // per element, chosen b or nullopt
  Report report;
};
RichnessResult richness_via_filters(const AlgebraRef& L, const Caps& caps = {});

/// Interval algebra [0,b] for complemented b, with -x = ~x ^ b, and the
/// epimorphism h_b(x) = x ^ b whose kernel is R(F(b)).
struct IntervalResult {
  AlgebraRef algebra;
  Morphism h;
};
IntervalResult interval_algebra(const AlgebraRef& L, int b);

/// P o tau* o Omega = Psi, checked pointwise over every element, where the
/// constant set for Psi is the set of restrictions of L's constants to B(L).
Report commuting_diagram_check(const AlgebraRef& L, const Caps& caps = {});

}  // namespace mlmw
