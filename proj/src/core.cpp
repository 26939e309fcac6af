#include "mlmw/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace mlmw {

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

void Report::add(const std::string& law, const std::string& detail) {
  items.push_back({law, detail});
}

void Report::add_once(const std::string& law, const std::string& detail) {
  if (!names(law)) add(law, detail);
}

bool Report::names(const std::string& law) const {
  for (const auto& v : items)
    if (v.law == law) return true;
  return false;
}

void Report::merge(const Report& other) {
  for (const auto& v : other.items) items.push_back(v);
}

std::string Report::to_string() const {
  if (ok()) return "ok\n";
  std::ostringstream os;
  for (const auto& v : items) os << v.law << ": " << v.detail << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Poset and tables
// ---------------------------------------------------------------------------

Report validate_poset(const PosetTable& p) {
  Report r;
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    if (static_cast<int>(p.leq[a].size()) != n)
      throw StructuralError("poset matrix is not square");
  for (int a = 0; a < n; ++a)
    if (!p.le(a, a)) {
      r.add_once("poset-reflexive", "a=" + std::to_string(a));
      break;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.le(a, b) && p.le(b, a))
        r.add_once("poset-antisymmetric",
                   "a=" + std::to_string(a) + " b=" + std::to_string(b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.le(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (p.le(b, c) && !p.le(a, c))
          r.add_once("poset-transitive", "a=" + std::to_string(a) + " b=" +
                                             std::to_string(b) + " c=" +
                                             std::to_string(c));
    }
  return r;
}

OpTable1 identity_table(int n) {
  OpTable1 t;
  t.map.resize(n);
  std::iota(t.map.begin(), t.map.end(), 0);
  return t;
}

// ---------------------------------------------------------------------------
// ElementSet
// ---------------------------------------------------------------------------

static void check_universe(int universe) {
  if (universe < 0 || universe > 64)
    throw StructuralError("element set universe must be within [0,64]");
}

ElementSet ElementSet::empty(int universe) {
  check_universe(universe);
  return {0, universe};
}

ElementSet ElementSet::all(int universe) {
  check_universe(universe);
  uint64_t m = universe == 64 ? ~uint64_t{0} : (uint64_t{1} << universe) - 1;
  return {m, universe};
}

ElementSet ElementSet::of(int universe, std::initializer_list<int> xs) {
  ElementSet s = empty(universe);
  for (int x : xs) s.insert(x);
  return s;
}

ElementSet ElementSet::from_mask(int universe, uint64_t mask) {
  check_universe(universe);
  return {mask, universe};
}

int ElementSet::count() const { return std::popcount(mask); }

ElementSet ElementSet::intersect(const ElementSet& o) const {
  return {mask & o.mask, universe};
}

ElementSet ElementSet::unite(const ElementSet& o) const {
  return {mask | o.mask, universe};
}

ElementSet ElementSet::minus(const ElementSet& o) const {
  return {mask & ~o.mask, universe};
}

ElementSet ElementSet::complement() const {
  return {all(universe).mask & ~mask, universe};
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (int x = 0; x < universe; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::string ElementSet::to_string(const Carrier& c) const {
  std::string out = "{";
  bool first = true;
  for (int x : elements()) {
    if (!first) out += ",";
    out += c.name(x);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition Partition::identity(int n) {
  Partition p;
  p.block_of.resize(n);
  std::iota(p.block_of.begin(), p.block_of.end(), 0);
  return p;
}

Partition Partition::total(int n) {
  Partition p;
  p.block_of.assign(n, 0);
  return p;
}

Partition Partition::from_blocks(const std::vector<int>& block_of) {
  Partition p;
  p.block_of = block_of;
  p.normalize();
  return p;
}

int Partition::num_blocks() const {
  int mx = -1;
  for (int b : block_of) mx = std::max(mx, b);
  return mx + 1;
}

void Partition::normalize() {
  int mx = -1;
  for (int b : block_of) mx = std::max(mx, b);
  std::vector<int> rename(mx + 1, -1);
  int next = 0;
  for (int& b : block_of) {
    if (rename[b] < 0) rename[b] = next++;
    b = rename[b];
  }
}

ElementSet Partition::block_containing(int x) const {
  ElementSet s = ElementSet::empty(size());
  for (int y = 0; y < size(); ++y)
    if (same(x, y)) s.insert(y);
  return s;
}

std::vector<ElementSet> Partition::blocks() const {
  std::vector<ElementSet> out(num_blocks(), ElementSet::empty(size()));
  for (int x = 0; x < size(); ++x) out[block_of[x]].insert(x);
  return out;
}

bool Partition::refines(const Partition& o) const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (same(x, y) && !o.same(x, y)) return false;
  return true;
}

bool Partition::is_identity() const { return num_blocks() == size(); }
bool Partition::is_total() const { return num_blocks() <= 1; }

Partition Partition::meet(const Partition& a, const Partition& b) {
  const int n = a.size();
  Partition p;
  p.block_of.resize(n);
  for (int x = 0; x < n; ++x)
    p.block_of[x] = a.block_of[x] * b.num_blocks() + b.block_of[x];
  p.normalize();
  return p;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // keep the smaller index as root for deterministic numbering
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

Partition partition_from_uf(UnionFind& uf, int n) {
  Partition p;
  p.block_of.resize(n);
  for (int x = 0; x < n; ++x) p.block_of[x] = uf.find(x);
  p.normalize();
  return p;
}

}  // namespace

Partition Partition::join(const Partition& a, const Partition& b) {
  const int n = a.size();
  UnionFind uf(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (a.same(x, y) || b.same(x, y)) uf.unite(x, y);
  return partition_from_uf(uf, n);
}

std::vector<std::vector<bool>> Partition::compose(const Partition& a,
                                                  const Partition& b) {
  const int n = a.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!a.same(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (b.same(y, z)) rel[x][z] = true;
    }
  return rel;
}

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

Signature Signature::none() { return {}; }

Signature Signature::bounded_lattice() {
  Signature s;
  s.meet = s.join = s.bounds = true;
  return s;
}

Signature Signature::de_morgan() {
  Signature s = bounded_lattice();
  s.neg = true;
  return s;
}

Signature Signature::lm() {
  Signature s = de_morgan();
  s.sigma = true;
  return s;
}

Signature Signature::mlm() {
  Signature s = lm();
  s.exists = true;
  return s;
}

// ---------------------------------------------------------------------------
// FiniteAlgebra
// ---------------------------------------------------------------------------

AlgebraRef share(FiniteAlgebra a) {
  return std::make_shared<const FiniteAlgebra>(std::move(a));
}

std::vector<std::pair<std::string, const OpTable1*>> FiniteAlgebra::unary_ops()
    const {
  std::vector<std::pair<std::string, const OpTable1*>> out;
  out.emplace_back("neg", &neg);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j)
      out.emplace_back(
          "sigma_" + std::to_string(i) + std::to_string(j),
          &sigma[sigma_index(i, j)]);
  if (exists) out.emplace_back("exists", &*exists);
  return out;
}

std::vector<std::pair<std::string, const OpTable2*>> FiniteAlgebra::binary_ops()
    const {
  return {{"meet", &meet}, {"join", &join}};
}

Report FiniteAlgebra::check_shape() const {
  Report r;
  const int sz = size();
  if (sz < 1) {
    r.add("shape", "carrier is empty");
    return r;
  }
  for (int a = 0; a < sz; ++a)
    for (int b = a + 1; b < sz; ++b)
      if (carrier.name(a) == carrier.name(b))
        r.add_once("shape", "duplicate element name " + carrier.name(a));
  if (n < 2 || m < 2) r.add("shape", "n and m must be >= 2");
  auto bad_index = [&](int v) { return v < 0 || v >= sz; };
  auto check1 = [&](const std::string& nm, const OpTable1& t) {
    if (t.size() != sz) {
      r.add("shape", nm + " table has wrong length");
      return;
    }
    for (int x = 0; x < sz; ++x)
      if (bad_index(t(x))) {
        r.add("shape", nm + " not total at " + std::to_string(x));
        return;
      }
  };
  auto check2 = [&](const std::string& nm, const OpTable2& t) {
    if (t.size() != sz) {
      r.add("shape", nm + " table has wrong size");
      return;
    }
    for (int x = 0; x < sz; ++x) {
      if (static_cast<int>(t.table[x].size()) != sz) {
        r.add("shape", nm + " table is not square");
        return;
      }
      for (int y = 0; y < sz; ++y)
        if (bad_index(t(x, y))) {
          r.add("shape", nm + " not total at (" + std::to_string(x) + "," +
                             std::to_string(y) + ")");
          return;
        }
    }
  };
  if (leq.size() != sz) r.add("shape", "leq matrix has wrong size");
  check2("meet", meet);
  check2("join", join);
  check1("neg", neg);
  if (static_cast<int>(sigma.size()) != (n - 1) * (m - 1))
    r.add("shape", "sigma family must have (n-1)*(m-1) tables");
  else
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < m; ++j)
        check1("sigma_" + std::to_string(i) + std::to_string(j),
               sigma[sigma_index(i, j)]);
  if (exists) check1("exists", *exists);
  if (bad_index(bottom) || bad_index(top)) r.add("shape", "bad bound indices");
  return r;
}

// ---------------------------------------------------------------------------
// Morphism
// ---------------------------------------------------------------------------

Report Morphism::preserves(const Signature& sig) const {
  Report r;
  const FiniteAlgebra& A = *source;
  const FiniteAlgebra& B = *target;
  const int sz = A.size();
  if (static_cast<int>(map.size()) != sz) {
    r.add("morphism-total", "map length differs from source size");
    return r;
  }
  for (int x = 0; x < sz; ++x)
    if (map[x] < 0 || map[x] >= B.size()) {
      r.add("morphism-total", "value out of range at " + std::to_string(x));
      return r;
    }
  auto wit2 = [&](int x, int y) {
    return A.name(x) + "," + A.name(y);
  };
  if (sig.meet || sig.join) {
    for (int x = 0; x < sz; ++x)
      for (int y = 0; y < sz; ++y) {
        if (sig.meet && map[A.mt(x, y)] != B.mt(map[x], map[y]))
          r.add_once("preserve-meet", wit2(x, y));
        if (sig.join && map[A.jn(x, y)] != B.jn(map[x], map[y]))
          r.add_once("preserve-join", wit2(x, y));
      }
  }
  if (sig.neg)
    for (int x = 0; x < sz; ++x)
      if (map[A.ng(x)] != B.ng(map[x])) {
        r.add_once("preserve-neg", A.name(x));
        break;
      }
  if (sig.sigma) {
    if (A.n != B.n || A.m != B.m)
      r.add("preserve-sigma", "source and target have different (n,m)");
    else
      for (int i = 1; i < A.n; ++i)
        for (int j = 1; j < A.m; ++j)
          for (int x = 0; x < sz; ++x)
            if (map[A.sig(i, j, x)] != B.sig(i, j, map[x]))
              r.add_once("preserve-sigma",
                         "(" + std::to_string(i) + "," + std::to_string(j) +
                             ") at " + A.name(x));
  }
  if (sig.exists) {
    if (!A.has_exists() || !B.has_exists())
      r.add("preserve-exists", "missing exists table");
    else
      for (int x = 0; x < sz; ++x)
        if (map[A.ex(x)] != B.ex(map[x])) {
          r.add_once("preserve-exists", A.name(x));
          break;
        }
  }
  if (sig.bounds) {
    if (map[A.bottom] != B.bottom) r.add("preserve-bottom", A.name(A.bottom));
    if (map[A.top] != B.top) r.add("preserve-top", A.name(A.top));
  }
  return r;
}

bool Morphism::is_injective() const {
  std::vector<bool> seen(target->size(), false);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool Morphism::is_surjective() const {
  std::vector<bool> seen(target->size(), false);
  for (int v : map) seen[v] = true;
  for (bool b : seen)
    if (!b) return false;
  return true;
}

// ---------------------------------------------------------------------------
// validate_lattice
// ---------------------------------------------------------------------------

Report validate_lattice(const OpTable2& meet, const OpTable2& join,
                        const PosetTable& leq) {
  const int n = meet.size();
  if (join.size() != n || leq.size() != n)
    throw StructuralError("meet/join/leq tables have mismatched dimensions");
  for (int a = 0; a < n; ++a)
    if (static_cast<int>(meet.table[a].size()) != n ||
        static_cast<int>(join.table[a].size()) != n ||
        static_cast<int>(leq.leq[a].size()) != n)
      throw StructuralError("meet/join/leq tables are not square");

  Report r = validate_poset(leq);
  auto nm = [](int x) { return std::to_string(x); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (meet(a, b) != meet(b, a))
        r.add_once("commutativity", "meet at " + nm(a) + "," + nm(b));
      if (join(a, b) != join(b, a))
        r.add_once("commutativity", "join at " + nm(a) + "," + nm(b));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (meet(meet(a, b), c) != meet(a, meet(b, c)))
          r.add_once("associativity",
                     "meet at " + nm(a) + "," + nm(b) + "," + nm(c));
        if (join(join(a, b), c) != join(a, join(b, c)))
          r.add_once("associativity",
                     "join at " + nm(a) + "," + nm(b) + "," + nm(c));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (meet(a, join(a, b)) != a)
        r.add_once("absorption", "a^(avb) at " + nm(a) + "," + nm(b));
      if (join(a, meet(a, b)) != a)
        r.add_once("absorption", "av(a^b) at " + nm(a) + "," + nm(b));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          r.add_once("distributivity",
                     "a^(bvc) at " + nm(a) + "," + nm(b) + "," + nm(c));
        if (join(a, meet(b, c)) != meet(join(a, b), join(a, c)))
          r.add_once("distributivity",
                     "av(b^c) at " + nm(a) + "," + nm(b) + "," + nm(c));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (leq.le(a, b) != (meet(a, b) == a))
        r.add_once("leq-consistency", "meet at " + nm(a) + "," + nm(b));
      if (leq.le(a, b) != (join(a, b) == b))
        r.add_once("leq-consistency", "join at " + nm(a) + "," + nm(b));
    }
  bool has_bottom = false, has_top = false;
  for (int a = 0; a < n; ++a) {
    bool bot = true, top = true;
    for (int b = 0; b < n; ++b) {
      bot = bot && leq.le(a, b);
      top = top && leq.le(b, a);
    }
    has_bottom = has_bottom || bot;
    has_top = has_top || top;
  }
  if (!has_bottom) r.add("bounds", "no least element");
  if (!has_top) r.add("bounds", "no greatest element");
  return r;
}

// ---------------------------------------------------------------------------
// congruence_closure
// ---------------------------------------------------------------------------

Partition congruence_closure(const FiniteAlgebra& L,
                             const std::vector<std::pair<int, int>>& pairs) {
  const int n = L.size();
  for (auto [a, b] : pairs)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw StructuralError("congruence_closure: pair index out of range");
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);

  auto unaries = L.unary_ops();
  auto binaries = L.binary_ops();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (const auto& [nm, u] : unaries)
          changed |= uf.unite((*u)(x), (*u)(y));
        for (const auto& [nm, b] : binaries)
          for (int z = 0; z < n; ++z) {
            changed |= uf.unite((*b)(x, z), (*b)(y, z));
            changed |= uf.unite((*b)(z, x), (*b)(z, y));
          }
      }
  }
  return partition_from_uf(uf, n);
}

// ---------------------------------------------------------------------------
// enumerate_endomorphisms
// ---------------------------------------------------------------------------

namespace {

// Partial-map consistency for every constraint whose inputs are decided.
bool endo_consistent(const FiniteAlgebra& L, const Signature& sig,
                     const std::vector<int>& map, int decided) {
  if (sig.bounds) {
    if (L.bottom < decided && map[L.bottom] != L.bottom) return false;
    if (L.top < decided && map[L.top] != L.top) return false;
  }
  for (int x = 0; x < decided; ++x) {
    if (sig.neg && L.ng(x) < decided && map[L.ng(x)] != L.ng(map[x]))
      return false;
    if (sig.sigma)
      for (int i = 1; i < L.n; ++i)
        for (int j = 1; j < L.m; ++j) {
          int sx = L.sig(i, j, x);
          if (sx < decided && map[sx] != L.sig(i, j, map[x])) return false;
        }
    if (sig.exists && L.has_exists()) {
      int exx = L.ex(x);
      if (exx < decided && map[exx] != L.ex(map[x])) return false;
    }
    for (int y = 0; y < decided; ++y) {
      if (sig.meet) {
        int xy = L.mt(x, y);
        if (xy < decided && map[xy] != L.mt(map[x], map[y])) return false;
      }
      if (sig.join) {
        int xy = L.jn(x, y);
        if (xy < decided && map[xy] != L.jn(map[x], map[y])) return false;
      }
    }
  }
  return true;
}

void endo_search(const AlgebraRef& L, const Signature& sig,
                 std::vector<int>& map, int pos,
                 std::vector<Morphism>& out) {
  const int n = L->size();
  if (pos == n) {
    out.push_back(Morphism{L, L, map});
    return;
  }
  for (int v = 0; v < n; ++v) {
    map[pos] = v;
    if (endo_consistent(*L, sig, map, pos + 1)) endo_search(L, sig, map, pos + 1, out);
  }
  map[pos] = -1;
}

}  // namespace

std::vector<Morphism> enumerate_endomorphisms(const AlgebraRef& L,
                                              const Signature& sig,
                                              const Caps& caps) {
  if (L->size() > caps.endo)
    throw CapExceeded("cap-endo", "carrier size " + std::to_string(L->size()) +
                                      " exceeds cap-endo=" +
                                      std::to_string(caps.endo));
  std::vector<int> map(L->size(), -1);
  std::vector<Morphism> out;
  endo_search(L, sig, map, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// enumerate_upsets
// ---------------------------------------------------------------------------

std::vector<ElementSet> enumerate_upsets(const PosetTable& poset,
                                         const Caps& caps) {
  const int n = poset.size();
  if (n > caps.upsets)
    throw CapExceeded("cap-upsets", "poset size " + std::to_string(n) +
                                        " exceeds cap-upsets=" +
                                        std::to_string(caps.upsets));
  std::vector<uint64_t> up(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (poset.le(x, y)) up[x] |= uint64_t{1} << y;
  std::vector<ElementSet> out;
  const uint64_t limit = uint64_t{1} << n;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    bool good = true;
    for (uint64_t rest = mask; rest && good; rest &= rest - 1) {
      int x = std::countr_zero(rest);
      good = (up[x] & ~mask) == 0;
    }
    if (good) out.push_back(ElementSet::from_mask(n, mask));
  }
  return out;
}

ElementSet upset_of(const PosetTable& poset, int a) {
  ElementSet s = ElementSet::empty(poset.size());
  for (int y = 0; y < poset.size(); ++y)
    if (poset.le(a, y)) s.insert(y);
  return s;
}

// ---------------------------------------------------------------------------
// find_algebra_isomorphism
// ---------------------------------------------------------------------------

namespace {

bool iso_consistent(const FiniteAlgebra& A, const FiniteAlgebra& B,
                    const Signature& sig, const std::vector<int>& map,
                    int decided) {
  if (sig.bounds) {
    if (A.bottom < decided && map[A.bottom] != B.bottom) return false;
    if (A.top < decided && map[A.top] != B.top) return false;
  }
  for (int x = 0; x < decided; ++x) {
    if (sig.neg && A.ng(x) < decided && map[A.ng(x)] != B.ng(map[x]))
      return false;
    if (sig.sigma)
      for (int i = 1; i < A.n; ++i)
        for (int j = 1; j < A.m; ++j) {
          int sx = A.sig(i, j, x);
          if (sx < decided && map[sx] != B.sig(i, j, map[x])) return false;
        }
    if (sig.exists) {
      int exx = A.ex(x);
      if (exx < decided && map[exx] != B.ex(map[x])) return false;
    }
    for (int y = 0; y < decided; ++y) {
      if (sig.meet) {
        int xy = A.mt(x, y);
        if (xy < decided && map[xy] != B.mt(map[x], map[y])) return false;
      }
      if (sig.join) {
        int xy = A.jn(x, y);
        if (xy < decided && map[xy] != B.jn(map[x], map[y])) return false;
      }
    }
  }
  return true;
}

bool iso_search(const FiniteAlgebra& A, const FiniteAlgebra& B,
                const Signature& sig, std::vector<int>& map,
                std::vector<bool>& used, int pos) {
  const int n = A.size();
  if (pos == n) return true;
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    map[pos] = v;
    used[v] = true;
    if (iso_consistent(A, B, sig, map, pos + 1) &&
        iso_search(A, B, sig, map, used, pos + 1))
      return true;
    used[v] = false;
  }
  map[pos] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_algebra_isomorphism(
    const FiniteAlgebra& A, const FiniteAlgebra& B, const Signature& sig) {
  if (A.size() != B.size()) return std::nullopt;
  if (sig.sigma && (A.n != B.n || A.m != B.m)) return std::nullopt;
  if (sig.exists && (!A.has_exists() || !B.has_exists())) return std::nullopt;
  std::vector<int> map(A.size(), -1);
  std::vector<bool> used(A.size(), false);
  if (iso_search(A, B, sig, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace mlmw
