// fixtures.hpp -- the canonical workbench algebras and small constructors.

#pragma once

#include "mlmw/core.hpp"

namespace mlmw {

/// TRIV2, CHAIN3, SIX, PROD. TRIV2/CHAIN3/SIX are the two-element grid
/// powers for (n,m) = (2,2), (3,2), (3,3) with the identity quantifier;
/// PROD is CHAIN3 x CHAIN3 with the diagonal-join quantifier.
FiniteAlgebra fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Two-element Boolean algebra, identity quantifier, n = m = 2.
FiniteAlgebra two_element_boolean();

/// Two-element Boolean carrier viewed with an (n,m) sigma signature (every
/// sigma the identity). Not centred when (n,m) != (2,2).
FiniteAlgebra two_element_lm(int n, int m);

/// Componentwise product; both factors must share (n,m). The quantifier is
/// componentwise when both factors have one, absent otherwise.
FiniteAlgebra product(const FiniteAlgebra& A, const FiniteAlgebra& B);

FiniteAlgebra with_quantifier(FiniteAlgebra L, OpTable1 q);
FiniteAlgebra with_identity_quantifier(FiniteAlgebra L);

}  // namespace mlmw
