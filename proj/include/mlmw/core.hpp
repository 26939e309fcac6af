// core.hpp -- finite carriers, operation tables, bitmask subsets, partitions,
// morphisms, and the generic enumeration/closure oracles everything else
// builds on.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mlmw {

// ---------------------------------------------------------------------------
// Errors and reports
// ---------------------------------------------------------------------------

/// Malformed input: dimension mismatches, invalid indices, bad documents.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed input rejected by a precondition (e.g. a subset that is not a
/// Moore family, a filter that is not an ms-filter, a non-rich algebra).
struct RejectedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration refused because the input exceeds a configured cap.
struct CapExceeded : std::runtime_error {
  std::string cap;
  CapExceeded(std::string cap_name, const std::string& what)
      : std::runtime_error(what), cap(std::move(cap_name)) {}
};

/// A theorem-backed postcondition failed; indicates a bug, not bad input.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Enumeration caps. Exceeding a cap raises CapExceeded rather than
/// truncating silently.
struct Caps {
  int carrier = 20;
  int endo = 12;
  int upsets = 20;
};

struct Violation {
  std::string law;
  std::string detail;
};

/// Result of a law-checking pass: one entry per violated law, first witness.
struct Report {
  std::vector<Violation> items;

  bool ok() const { return items.empty(); }
  void add(const std::string& law, const std::string& detail);
  /// Add only if no entry for `law` exists yet (keeps first witness).
  void add_once(const std::string& law, const std::string& detail);
  bool names(const std::string& law) const;
  void merge(const Report& other);
  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Carriers and tables
// ---------------------------------------------------------------------------

/// Indexed set of elements; names are display-only.
struct Carrier {
  std::vector<std::string> names;

  int size() const { return static_cast<int>(names.size()); }
  const std::string& name(int x) const { return names.at(x); }
};

/// Order relation as a boolean matrix; leq[a][b] means a <= b.
struct PosetTable {
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(leq.size()); }
  bool le(int a, int b) const { return leq[a][b]; }
  bool operator==(const PosetTable& o) const { return leq == o.leq; }
};

/// Reflexivity, antisymmetry, transitivity.
Report validate_poset(const PosetTable& p);

struct OpTable1 {
  std::vector<int> map;

  int size() const { return static_cast<int>(map.size()); }
  int operator()(int x) const { return map[x]; }
  bool operator==(const OpTable1& o) const { return map == o.map; }
  bool operator<(const OpTable1& o) const { return map < o.map; }
};

OpTable1 identity_table(int n);

struct OpTable2 {
  std::vector<std::vector<int>> table;

  int size() const { return static_cast<int>(table.size()); }
  int operator()(int x, int y) const { return table[x][y]; }
  bool operator==(const OpTable2& o) const { return table == o.table; }
};

// ---------------------------------------------------------------------------
// Element sets as bit masks
// ---------------------------------------------------------------------------

/// Subset of a carrier encoded as a fixed-width bit mask (universe <= 64).
struct ElementSet {
  uint64_t mask = 0;
  int universe = 0;

  static ElementSet empty(int universe);
  static ElementSet all(int universe);
  static ElementSet of(int universe, std::initializer_list<int> xs);
  static ElementSet from_mask(int universe, uint64_t mask);

  bool contains(int x) const { return (mask >> x) & 1u; }
  void insert(int x) { mask |= uint64_t{1} << x; }
  void erase(int x) { mask &= ~(uint64_t{1} << x); }
  int count() const;
  bool is_empty() const { return mask == 0; }
  bool subset_of(const ElementSet& o) const { return (mask & ~o.mask) == 0; }
  ElementSet intersect(const ElementSet& o) const;
  ElementSet unite(const ElementSet& o) const;
  ElementSet minus(const ElementSet& o) const;
  ElementSet complement() const;
  std::vector<int> elements() const;

  bool operator==(const ElementSet& o) const {
    return mask == o.mask && universe == o.universe;
  }
  bool operator<(const ElementSet& o) const { return mask < o.mask; }
  std::string to_string(const Carrier& c) const;
};

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Equivalence relation as a block assignment. Block ids are always
/// normalized to first-occurrence order, so equal partitions compare equal.
struct Partition {
  std::vector<int> block_of;

  static Partition identity(int n);
  static Partition total(int n);
  static Partition from_blocks(const std::vector<int>& block_of);

  int size() const { return static_cast<int>(block_of.size()); }
  int num_blocks() const;
  bool same(int a, int b) const { return block_of[a] == block_of[b]; }
  void normalize();
  ElementSet block_containing(int x) const;
  std::vector<ElementSet> blocks() const;
  /// this <= other in the refinement order (every block of this inside one
  /// block of other).
  bool refines(const Partition& o) const;
  bool is_identity() const;
  bool is_total() const;

  static Partition meet(const Partition& a, const Partition& b);
  static Partition join(const Partition& a, const Partition& b);
  /// Relation composition a;b = {(x,z) : exists y, x a y and y b z},
  /// returned as a boolean matrix (not a partition in general).
  static std::vector<std::vector<bool>> compose(const Partition& a,
                                                const Partition& b);

  bool operator==(const Partition& o) const { return block_of == o.block_of; }
  bool operator<(const Partition& o) const { return block_of < o.block_of; }
};

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

/// Which operations a morphism must preserve / an enumeration must respect.
struct Signature {
  bool meet = false;
  bool join = false;
  bool neg = false;
  bool sigma = false;
  bool exists = false;
  bool bounds = false;

  static Signature none();
  static Signature bounded_lattice();
  static Signature de_morgan();
  static Signature lm();
  static Signature mlm();
};

/// Finite algebra with total operation tables: bounded distributive lattice
/// with involution, a sigma family indexed by {1..n-1} x {1..m-1} in
/// row-major order, and an optional existential quantifier.
struct FiniteAlgebra {
  Carrier carrier;
  PosetTable leq;
  OpTable2 meet, join;
  OpTable1 neg;
  int n = 2, m = 2;
  std::vector<OpTable1> sigma;
  std::optional<OpTable1> exists;
  int bottom = 0, top = 0;

  int size() const { return carrier.size(); }
  bool le(int a, int b) const { return leq.le(a, b); }
  int mt(int a, int b) const { return meet(a, b); }
  int jn(int a, int b) const { return join(a, b); }
  int ng(int a) const { return neg(a); }
  int sigma_index(int i, int j) const { return (i - 1) * (m - 1) + (j - 1); }
  int sig(int i, int j, int x) const { return sigma[sigma_index(i, j)](x); }
  bool has_exists() const { return exists.has_value(); }
  int ex(int x) const { return (*exists)(x); }
  /// Universal quantifier view: forall x = ~exists ~x.
  int fa(int x) const { return ng(ex(ng(x))); }
  const std::string& name(int x) const { return carrier.name(x); }

  /// All unary operation tables (neg, sigmas, exists if present), named.
  std::vector<std::pair<std::string, const OpTable1*>> unary_ops() const;
  /// All binary operation tables (meet, join), named.
  std::vector<std::pair<std::string, const OpTable2*>> binary_ops() const;

  /// Structural validity: table dimensions, index ranges, sigma family shape,
  /// distinct names. Does not check any algebraic law.
  Report check_shape() const;
};

using AlgebraRef = std::shared_ptr<const FiniteAlgebra>;
AlgebraRef share(FiniteAlgebra a);

/// Total map between carriers with a signature it can be checked against.
struct Morphism {
  AlgebraRef source;
  AlgebraRef target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  Report preserves(const Signature& sig) const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  bool operator==(const Morphism& o) const { return map == o.map; }
  bool operator<(const Morphism& o) const { return map < o.map; }
};

// ---------------------------------------------------------------------------
// Generic oracles
// ---------------------------------------------------------------------------

/// Bounded distributive lattice laws: commutativity, associativity,
/// absorption, distributivity, consistency of leq with meet/join, bounds.
/// Dimension mismatch between the tables raises StructuralError.
Report validate_lattice(const OpTable2& meet, const OpTable2& join,
                        const PosetTable& leq);

/// Smallest congruence of L containing the given pairs, by worklist closure
/// over every operation table. Deterministic block numbering.
Partition congruence_closure(const FiniteAlgebra& L,
                             const std::vector<std::pair<int, int>>& pairs);

/// All self-maps preserving the signature, in lexicographic map order.
/// Exhaustive backtracking with pruning; refuses above caps.endo.
std::vector<Morphism> enumerate_endomorphisms(const AlgebraRef& L,
                                              const Signature& sig,
                                              const Caps& caps = {});

/// All upward-closed subsets in ascending mask order; count equals the
/// number of antichains. Refuses above caps.upsets.
std::vector<ElementSet> enumerate_upsets(const PosetTable& poset,
                                         const Caps& caps = {});

/// Upward closure of {a}.
ElementSet upset_of(const PosetTable& poset, int a);

/// Backtracking search for a bijection A -> B preserving the signature.
std::optional<std::vector<int>> find_algebra_isomorphism(
    const FiniteAlgebra& A, const FiniteAlgebra& B, const Signature& sig);

}  // namespace mlmw
