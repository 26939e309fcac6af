#include "mlmw/representation.hpp"

#include <algorithm>

#include "mlmw/quantifier.hpp"

namespace mlmw {

namespace {

void require_boolean(const FiniteAlgebra& B) {
  Report laws = check_de_morgan(B);
  if (!laws.ok())
    throw RejectedInput("base algebra fails a lattice law: " +
                        laws.items.front().law);
  for (int b = 0; b < B.size(); ++b) {
    bool complemented = false;
    for (int c = 0; c < B.size(); ++c)
      if (B.mt(b, c) == B.bottom && B.jn(b, c) == B.top) complemented = true;
    if (!complemented)
      throw RejectedInput("base algebra is not Boolean: " + B.name(b) +
                          " has no complement");
  }
  if (B.has_exists()) {
    Report q = check_quantifier(B, *B.exists);
    if (!q.ok())
      throw RejectedInput("base quantifier fails " + q.items.front().law);
  }
}

void validate_full_suite(const FiniteAlgebra& A, const char* what) {
  Report r = check_de_morgan(A);
  r.merge(check_lm_axioms(A));
  if (A.has_exists()) r.merge(check_quantifier(A, *A.exists));
  if (!r.ok())
    throw InternalCheckError(std::string(what) + " fails the axiom suite: " +
                             r.items.front().law + " (" +
                             r.items.front().detail + ")");
}

int grid_index(const std::vector<std::vector<int>>& grids,
               const std::vector<int>& g) {
  auto it = std::lower_bound(grids.begin(), grids.end(), g);
  if (it == grids.end() || *it != g)
    throw InternalCheckError("value grid is not monotone");
  return static_cast<int>(it - grids.begin());
}

std::string bracket_name(const FiniteAlgebra& B, const std::vector<int>& cells,
                         char open, char close) {
  std::string out(1, open);
  for (size_t k = 0; k < cells.size(); ++k) {
    if (k) out += ",";
    out += B.name(cells[k]);
  }
  out += close;
  return out;
}

}  // namespace

std::vector<std::vector<int>> monotone_grids(const FiniteAlgebra& B, int n,
                                             int m, const Caps& caps) {
  const int cells = (n - 1) * (m - 1);
  std::vector<std::vector<int>> grids;
  std::vector<int> cur(cells, 0);
  auto idx = [&](int i, int j) { return (i - 1) * (m - 1) + (j - 1); };
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == cells) {
      grids.push_back(cur);
      if (static_cast<int>(grids.size()) > caps.carrier)
        throw CapExceeded("cap-carrier",
                          "grid power exceeds cap-carrier=" +
                              std::to_string(caps.carrier));
      return;
    }
    int i = pos / (m - 1) + 1, j = pos % (m - 1) + 1;
    for (int v = 0; v < B.size(); ++v) {
      if (i > 1 && !B.le(cur[idx(i - 1, j)], v)) continue;
      if (j > 1 && !B.le(cur[idx(i, j - 1)], v)) continue;
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return grids;
}

FiniteAlgebra grid_power(const FiniteAlgebra& B, int n, int m,
                         const Caps& caps) {
  if (n < 2 || m < 2) throw StructuralError("grid power needs n,m >= 2");
  require_boolean(B);
  std::vector<std::vector<int>> grids = monotone_grids(B, n, m, caps);
  const int sz = static_cast<int>(grids.size());
  const int cells = (n - 1) * (m - 1);
  auto idx = [&](int i, int j) { return (i - 1) * (m - 1) + (j - 1); };

  FiniteAlgebra G;
  G.n = n;
  G.m = m;
  G.carrier.names.reserve(sz);
  for (const auto& g : grids)
    G.carrier.names.push_back(bracket_name(B, g, '[', ']'));
  G.leq.leq.assign(sz, std::vector<bool>(sz, false));
  G.meet.table.assign(sz, std::vector<int>(sz, 0));
  G.join.table.assign(sz, std::vector<int>(sz, 0));
  G.neg.map.assign(sz, 0);
  std::vector<int> tmp(cells);
  for (int a = 0; a < sz; ++a) {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < m; ++j)
        tmp[idx(i, j)] = B.ng(grids[a][idx(n - i, m - j)]);
    G.neg.map[a] = grid_index(grids, tmp);
    for (int b = 0; b < sz; ++b) {
      bool le = true;
      for (int k = 0; k < cells; ++k) {
        tmp[k] = B.mt(grids[a][k], grids[b][k]);
        le = le && B.le(grids[a][k], grids[b][k]);
      }
      G.leq.leq[a][b] = le;
      G.meet.table[a][b] = grid_index(grids, tmp);
      for (int k = 0; k < cells; ++k) tmp[k] = B.jn(grids[a][k], grids[b][k]);
      G.join.table[a][b] = grid_index(grids, tmp);
    }
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j) {
      OpTable1 t;
      t.map.assign(sz, 0);
      for (int a = 0; a < sz; ++a) {
        std::vector<int> constant(cells, grids[a][idx(i, j)]);
        t.map[a] = grid_index(grids, constant);
      }
      G.sigma.push_back(std::move(t));
    }
  if (B.has_exists()) {
    OpTable1 t;
    t.map.assign(sz, 0);
    for (int a = 0; a < sz; ++a) {
      for (int k = 0; k < cells; ++k) tmp[k] = B.ex(grids[a][k]);
      t.map[a] = grid_index(grids, tmp);
    }
    G.exists = std::move(t);
  }
  G.bottom = grid_index(grids, std::vector<int>(cells, B.bottom));
  G.top = grid_index(grids, std::vector<int>(cells, B.top));
  validate_full_suite(G, "grid power");
  return G;
}

FiniteAlgebra power_with_join_quantifier(const FiniteAlgebra& base, int k,
                                         const Caps& caps) {
  if (k < 1) throw StructuralError("power needs at least one index");
  long long size = 1;
  for (int t = 0; t < k; ++t) {
    size *= base.size();
    if (size > caps.carrier)
      throw CapExceeded("cap-carrier", "functional power exceeds cap-carrier=" +
                                           std::to_string(caps.carrier));
  }
  const int sz = static_cast<int>(size);
  const int bs = base.size();
  auto decode = [&](int t) {
    std::vector<int> out(k);
    for (int p = k - 1; p >= 0; --p) {
      out[p] = t % bs;
      t /= bs;
    }
    return out;
  };
  auto encode = [&](const std::vector<int>& tup) {
    int t = 0;
    for (int p = 0; p < k; ++p) t = t * bs + tup[p];
    return t;
  };

  FiniteAlgebra P;
  P.n = base.n;
  P.m = base.m;
  P.carrier.names.reserve(sz);
  for (int t = 0; t < sz; ++t)
    P.carrier.names.push_back(bracket_name(base, decode(t), '(', ')'));
  P.leq.leq.assign(sz, std::vector<bool>(sz, false));
  P.meet.table.assign(sz, std::vector<int>(sz, 0));
  P.join.table.assign(sz, std::vector<int>(sz, 0));
  P.neg.map.assign(sz, 0);
  for (int a = 0; a < sz; ++a) {
    std::vector<int> ta = decode(a);
    std::vector<int> tmp(k);
    for (int p = 0; p < k; ++p) tmp[p] = base.ng(ta[p]);
    P.neg.map[a] = encode(tmp);
    for (int b = 0; b < sz; ++b) {
      std::vector<int> tb = decode(b);
      bool le = true;
      for (int p = 0; p < k; ++p) {
        tmp[p] = base.mt(ta[p], tb[p]);
        le = le && base.le(ta[p], tb[p]);
      }
      P.leq.leq[a][b] = le;
      P.meet.table[a][b] = encode(tmp);
      for (int p = 0; p < k; ++p) tmp[p] = base.jn(ta[p], tb[p]);
      P.join.table[a][b] = encode(tmp);
    }
  }
  for (int i = 1; i < P.n; ++i)
    for (int j = 1; j < P.m; ++j) {
      OpTable1 t;
      t.map.assign(sz, 0);
      for (int a = 0; a < sz; ++a) {
        std::vector<int> ta = decode(a);
        std::vector<int> tmp2(k);
        for (int p = 0; p < k; ++p) tmp2[p] = base.sig(i, j, ta[p]);
        t.map[a] = encode(tmp2);
      }
      P.sigma.push_back(std::move(t));
    }
  OpTable1 ex;
  ex.map.assign(sz, 0);
  for (int a = 0; a < sz; ++a) {
    std::vector<int> ta = decode(a);
    int j = base.bottom;
    for (int p = 0; p < k; ++p) j = base.jn(j, ta[p]);
    ex.map[a] = encode(std::vector<int>(k, j));
  }
  P.exists = std::move(ex);
  P.bottom = encode(std::vector<int>(k, base.bottom));
  P.top = encode(std::vector<int>(k, base.top));
  validate_full_suite(P, "functional power");
  return P;
}

FiniteAlgebra functional_power(const FiniteAlgebra& B, int n, int m,
                               int index_count, const Caps& caps) {
  FiniteAlgebra base = B;
  base.exists.reset();  // the power's quantifier is the join rule
  FiniteAlgebra grid = grid_power(base, n, m, caps);
  return power_with_join_quantifier(grid, index_count, caps);
}

// ---------------------------------------------------------------------------
// tau
// ---------------------------------------------------------------------------

TauResult tau_embedding(const AlgebraRef& L, const Caps& caps) {
  TauResult out{boolean_subalgebra(*L, boolean_center(*L), L->has_exists()),
                nullptr,
                Morphism{},
                false,
                {}};
  const FiniteAlgebra& B = *out.center.algebra;
  out.target = share(grid_power(B, L->n, L->m, caps));
  std::vector<std::vector<int>> grids = monotone_grids(B, L->n, L->m, caps);

  out.tau.source = L;
  out.tau.target = out.target;
  out.tau.map.resize(L->size());
  const int cells = (L->n - 1) * (L->m - 1);
  for (int x = 0; x < L->size(); ++x) {
    std::vector<int> g(cells);
    for (int i = 1; i < L->n; ++i)
      for (int j = 1; j < L->m; ++j)
        g[(i - 1) * (L->m - 1) + (j - 1)] =
            out.center.from_parent[L->sig(i, j, x)];
    out.tau.map[x] = grid_index(grids, g);
  }
  Signature sig = L->has_exists() ? Signature::mlm() : Signature::lm();
  out.report = out.tau.preserves(sig);
  if (!out.tau.is_injective()) out.report.add("tau-injective", "collision");
  out.surjective = out.tau.is_surjective();
  bool centred = is_centred(*L).has_value();
  if (out.surjective != centred)
    throw InternalCheckError("tau surjectivity disagrees with centredness");
  return out;
}

// ---------------------------------------------------------------------------
// constants, witnesses, richness
// ---------------------------------------------------------------------------

std::vector<Morphism> constants(const AlgebraRef& L, const Caps& caps) {
  if (!L->has_exists())
    throw StructuralError("constants require a quantifier table");
  std::vector<Morphism> out;
  for (Morphism& c : enumerate_endomorphisms(L, Signature::lm(), caps)) {
    bool c1 = true, c2 = true;
    for (int x = 0; x < L->size(); ++x) {
      c1 = c1 && c(L->ex(x)) == L->ex(x);
      c2 = c2 && L->ex(c(x)) == c(x);
    }
    if (!(c1 && c2)) continue;
    for (int x = 0; x < L->size(); ++x) {
      if (c(c(x)) != c(x))
        throw InternalCheckError("constant is not idempotent");
      if (!L->le(c(x), L->ex(x)))
        throw InternalCheckError("constant exceeds the quantifier");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Morphism> witnesses(const AlgebraRef& L, int x, const Caps& caps) {
  std::vector<Morphism> out;
  for (Morphism& c : constants(L, caps))
    if (c(x) == L->ex(x)) out.push_back(std::move(c));
  return out;
}

bool is_rich(const AlgebraRef& L, const Caps& caps) {
  std::vector<Morphism> cs = constants(L, caps);
  for (int x = 0; x < L->size(); ++x) {
    bool witnessed = false;
    for (const Morphism& c : cs) witnessed = witnessed || c(x) == L->ex(x);
    if (!witnessed) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// omega
// ---------------------------------------------------------------------------

OmegaResult omega_embedding(const AlgebraRef& L, const Caps& caps) {
  if (!L->has_exists())
    throw StructuralError("omega requires a quantifier table");
  std::vector<Morphism> cs = constants(L, caps);
  for (int x = 0; x < L->size(); ++x) {
    bool witnessed = false;
    for (const Morphism& c : cs) witnessed = witnessed || c(x) == L->ex(x);
    if (!witnessed)
      throw RejectedInput("not rich: no witness for " + L->name(x));
  }

  ElementSet range_set = ElementSet::empty(L->size());
  for (int x = 0; x < L->size(); ++x)
    if (L->ex(x) == x) range_set.insert(x);
  OmegaResult out{induced_subalgebra(*L, range_set, true), nullptr,
                  std::move(cs), Morphism{}, {}};
  FiniteAlgebra base = *out.range.algebra;
  base.exists.reset();
  out.target = share(
      power_with_join_quantifier(base, static_cast<int>(out.consts.size()),
                                 caps));

  const int k = static_cast<int>(out.consts.size());
  const int bs = base.size();
  out.omega.source = L;
  out.omega.target = out.target;
  out.omega.map.resize(L->size());
  for (int x = 0; x < L->size(); ++x) {
    int t = 0;
    for (int p = 0; p < k; ++p) {
      int v = out.range.from_parent[out.consts[p](x)];
      if (v < 0) throw InternalCheckError("constant value escapes the range");
      t = t * bs + v;
    }
    out.omega.map[x] = t;
  }

  Report& r = out.report;
  // injectivity lemma: c(x) = 1 for every constant iff x = 1
  for (int x = 0; x < L->size(); ++x) {
    bool all_top = true;
    for (const Morphism& c : out.consts) all_top = all_top && c(x) == L->top;
    if (all_top != (x == L->top)) r.add_once("omega-lemma", L->name(x));
  }
  if (!out.omega.is_injective()) r.add("omega-injective", "collision");
  r.merge(out.omega.preserves(Signature::lm()));
  // join claim: the supremum of {c(x)} is exists x
  for (int x = 0; x < L->size(); ++x) {
    int j = L->bottom;
    for (const Morphism& c : out.consts) j = L->jn(j, c(x));
    if (j != L->ex(x)) r.add_once("omega-join", L->name(x));
  }
  // omega commutes with the quantifier of the power
  for (int x = 0; x < L->size(); ++x)
    if (out.omega.map[L->ex(x)] != out.target->ex(out.omega.map[x]))
      r.add_once("omega-exists", L->name(x));
  return out;
}

// ---------------------------------------------------------------------------
// psi
// ---------------------------------------------------------------------------

PsiResult psi_embedding(const AlgebraRef& L, const AlgebraRef& B_rich,
                        const std::vector<int>& center_embedding,
                        std::vector<Morphism> consts, const Caps& caps) {
  if (!L->has_exists() || !B_rich->has_exists())
    throw StructuralError("psi requires quantifier tables");
  require_boolean(*B_rich);

  // the embedding of B(L) into B_rich must be a monadic Boolean embedding
  ElementSet center = boolean_center(*L);
  if (static_cast<int>(center_embedding.size()) != L->size())
    throw StructuralError("center embedding has wrong length");
  for (int x : center.elements()) {
    int v = center_embedding[x];
    if (v < 0 || v >= B_rich->size())
      throw StructuralError("center element has no image in the rich algebra");
    for (int y : center.elements()) {
      if (center_embedding[y] == v && x != y)
        throw StructuralError("center embedding is not injective");
      if (center_embedding[L->mt(x, y)] != B_rich->mt(v, center_embedding[y]) ||
          center_embedding[L->jn(x, y)] != B_rich->jn(v, center_embedding[y]))
        throw StructuralError("center embedding breaks the lattice structure");
    }
    if (center_embedding[L->ng(x)] != B_rich->ng(v))
      throw StructuralError("center embedding breaks complementation");
    if (center_embedding[L->ex(x)] != B_rich->ex(v))
      throw StructuralError("center embedding breaks the quantifier");
  }
  if (center_embedding[L->bottom] != B_rich->bottom ||
      center_embedding[L->top] != B_rich->top)
    throw StructuralError("center embedding breaks the bounds");

  // every element of B_rich must have a witness among the given constants
  for (int b = 0; b < B_rich->size(); ++b) {
    bool witnessed = false;
    for (const Morphism& c : consts)
      witnessed = witnessed || c(b) == B_rich->ex(b);
    if (!witnessed)
      throw RejectedInput("rich algebra check failed: no witness for " +
                          B_rich->name(b));
  }

  ElementSet fix = ElementSet::empty(B_rich->size());
  for (int b = 0; b < B_rich->size(); ++b)
    if (B_rich->ex(b) == b) fix.insert(b);
  PsiResult out{B_rich, boolean_subalgebra(*B_rich, fix, false), nullptr,
                std::move(consts), Morphism{}, {}, {}};
  FiniteAlgebra eb = *out.b_range.algebra;
  FiniteAlgebra grid = grid_power(eb, L->n, L->m, caps);
  std::vector<std::vector<int>> grids = monotone_grids(eb, L->n, L->m, caps);
  out.target = share(power_with_join_quantifier(
      grid, static_cast<int>(out.consts.size()), caps));

  const int k = static_cast<int>(out.consts.size());
  const int cells = (L->n - 1) * (L->m - 1);
  out.psi.source = L;
  out.psi.target = out.target;
  out.psi.map.resize(L->size());
  out.values.assign(L->size(), {});
  for (int x = 0; x < L->size(); ++x) {
    int t = 0;
    out.values[x].resize(k);
    for (int p = 0; p < k; ++p) {
      std::vector<int> g(cells);
      out.values[x][p].resize(cells);
      for (int i = 1; i < L->n; ++i)
        for (int j = 1; j < L->m; ++j) {
          int cell = (i - 1) * (L->m - 1) + (j - 1);
          int v = out.consts[p](center_embedding[L->sig(i, j, x)]);
          out.values[x][p][cell] = v;
          int e = out.b_range.from_parent[v];
          if (e < 0)
            throw InternalCheckError("constant value escapes the range of B");
          g[cell] = e;
        }
      t = t * grid.size() + grid_index(grids, g);
    }
    out.psi.map[x] = t;
  }

  Report& r = out.report;
  if (!out.psi.is_injective()) r.add("psi-injective", "collision");
  r.merge(out.psi.preserves(Signature::lm()));
  for (int x = 0; x < L->size(); ++x)
    if (out.psi.map[L->ex(x)] != out.target->ex(out.psi.map[x]))
      r.add_once("psi-exists", L->name(x));
  // the bound grid: g_l(i,j) = exists sigma_ij l equals the pointwise join
  // of the image values
  for (int l = 0; l < L->size(); ++l)
    for (int i = 1; i < L->n; ++i)
      for (int j = 1; j < L->m; ++j) {
        int cell = (i - 1) * (L->m - 1) + (j - 1);
        int want = B_rich->ex(center_embedding[L->sig(i, j, l)]);
        int got = B_rich->bottom;
        for (int p = 0; p < k; ++p)
          got = B_rich->jn(got, out.values[l][p][cell]);
        if (want != got) {
          r.add_once("psi-bound-grid", L->name(l));
        }
      }
  return out;
}

PsiResult psi_embedding(const AlgebraRef& L, const Caps& caps) {
  Subalgebra center = boolean_subalgebra(*L, boolean_center(*L), true);
  AlgebraRef B = center.algebra;
  std::vector<Morphism> cs = constants(B, caps);
  std::vector<int> embed(L->size(), -1);
  for (int x = 0; x < L->size(); ++x)
    if (center.from_parent[x] >= 0) embed[x] = center.from_parent[x];
  return psi_embedding(L, B, embed, std::move(cs), caps);
}

// ---------------------------------------------------------------------------
// richness via quotient filters
// ---------------------------------------------------------------------------

RichnessResult richness_via_filters(const AlgebraRef& L, const Caps& caps) {
  if (!L->has_exists())
    throw StructuralError("richness check requires a quantifier table");
  if (L->size() > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "carrier size " + std::to_string(L->size()) +
                          " exceeds cap-carrier=" + std::to_string(caps.carrier));
  RichnessResult out;
  ElementSet center = boolean_center(*L);
  ElementSet range = ElementSet::empty(L->size());
  for (int x = 0; x < L->size(); ++x)
    if (L->ex(x) == x) range.insert(x);

  out.b_for.assign(L->size(), std::nullopt);
  for (int x = 0; x < L->size(); ++x) {
    for (int b : center.elements()) {
      if (L->mt(L->ex(x), b) != L->mt(x, b)) continue;
      IntervalResult iv = interval_algebra(L, b);
      // the restriction of h_b to the range must be bijective onto [0,b]
      if (range.count() != iv.algebra->size()) continue;
      std::vector<bool> hit(iv.algebra->size(), false);
      bool injective = true;
      for (int z : range.elements()) {
        int img = iv.h(z);
        if (hit[img]) injective = false;
        hit[img] = true;
      }
      bool surjective = true;
      for (bool h : hit) surjective = surjective && h;
      if (injective && surjective) {
        out.b_for[x] = b;
        break;
      }
    }
  }
  out.rich = true;
  for (int x = 0; x < L->size(); ++x)
    if (!out.b_for[x]) {
      out.rich = false;
      out.report.add_once("richness", "no quotient filter works for " +
                                          L->name(x));
    }
  if (out.rich != is_rich(L, caps))
    throw InternalCheckError(
        "filter route disagrees with the witness route on richness");
  return out;
}

// ---------------------------------------------------------------------------
// interval algebra
// ---------------------------------------------------------------------------

IntervalResult interval_algebra(const AlgebraRef& L, int b) {
  bool complemented = false;
  for (int c = 0; c < L->size(); ++c)
    if (L->mt(b, c) == L->bottom && L->jn(b, c) == L->top) complemented = true;
  if (!complemented)
    throw RejectedInput("interval bound " + L->name(b) + " is not Boolean");

  std::vector<int> members;
  for (int x = 0; x < L->size(); ++x)
    if (L->le(x, b)) members.push_back(x);
  const int sz = static_cast<int>(members.size());
  std::vector<int> from_parent(L->size(), -1);
  for (int k = 0; k < sz; ++k) from_parent[members[k]] = k;
  auto sub_of = [&](int parent) {
    int k = from_parent[parent];
    if (k < 0) throw InternalCheckError("interval not closed under operations");
    return k;
  };

  FiniteAlgebra I;
  I.n = L->n;
  I.m = L->m;
  for (int p : members) I.carrier.names.push_back(L->name(p));
  I.leq.leq.assign(sz, std::vector<bool>(sz, false));
  I.meet.table.assign(sz, std::vector<int>(sz, 0));
  I.join.table.assign(sz, std::vector<int>(sz, 0));
  I.neg.map.assign(sz, 0);
  for (int x = 0; x < sz; ++x) {
    I.neg.map[x] = sub_of(L->mt(L->ng(members[x]), b));
    for (int y = 0; y < sz; ++y) {
      I.leq.leq[x][y] = L->le(members[x], members[y]);
      I.meet.table[x][y] = sub_of(L->mt(members[x], members[y]));
      I.join.table[x][y] = sub_of(L->jn(members[x], members[y]));
    }
  }
  for (int i = 1; i < L->n; ++i)
    for (int j = 1; j < L->m; ++j) {
      OpTable1 t;
      t.map.assign(sz, 0);
      for (int x = 0; x < sz; ++x) t.map[x] = sub_of(L->sig(i, j, members[x]));
      I.sigma.push_back(std::move(t));
    }
  I.bottom = sub_of(L->bottom);
  I.top = sub_of(b);
  validate_full_suite(I, "interval algebra");

  IntervalResult out{share(std::move(I)), Morphism{}};
  out.h.source = L;
  out.h.target = out.algebra;
  out.h.map.resize(L->size());
  for (int x = 0; x < L->size(); ++x) out.h.map[x] = sub_of(L->mt(x, b));
  Report pres = out.h.preserves(Signature::lm());
  if (!pres.ok())
    throw InternalCheckError("h_b is not a homomorphism: " +
                             pres.items.front().law);
  if (!out.h.is_surjective())
    throw InternalCheckError("h_b is not surjective");
  // kernel = R(F(b)) and it is a congruence of the unquantified reduct
  std::vector<std::pair<int, int>> kernel_pairs;
  Partition kernel;
  kernel.block_of.resize(L->size());
  for (int x = 0; x < L->size(); ++x) kernel.block_of[x] = out.h.map[x];
  kernel.normalize();
  for (int x = 0; x < L->size(); ++x)
    for (int y = x + 1; y < L->size(); ++y) {
      if ((L->mt(x, b) == L->mt(y, b)) != kernel.same(x, y))
        throw InternalCheckError("kernel of h_b differs from R(F(b))");
      if (kernel.same(x, y)) kernel_pairs.emplace_back(x, y);
    }
  FiniteAlgebra reduct = *L;
  reduct.exists.reset();
  if (!(congruence_closure(reduct, kernel_pairs) == kernel))
    throw InternalCheckError("kernel of h_b is not a congruence");
  return out;
}

// ---------------------------------------------------------------------------
// commuting diagram
// ---------------------------------------------------------------------------

Report commuting_diagram_check(const AlgebraRef& L, const Caps& caps) {
  Report r;
  OmegaResult omega = omega_embedding(L, caps);  // refuses when not rich
  const std::vector<Morphism>& xl = omega.consts;

  Subalgebra center = boolean_subalgebra(*L, boolean_center(*L), true);
  AlgebraRef B = center.algebra;

  // restrictions of the constants of L to the center, deduplicated
  std::vector<std::pair<std::vector<int>, int>> restr;  // map, representative
  for (size_t p = 0; p < xl.size(); ++p) {
    std::vector<int> rc(B->size());
    for (int k = 0; k < B->size(); ++k) {
      int v = center.from_parent[xl[p](center.to_parent[k])];
      if (v < 0)
        throw InternalCheckError("constant does not preserve the center");
      rc[k] = v;
    }
    bool seen = false;
    for (auto& [mp, rep] : restr) seen = seen || mp == rc;
    if (!seen) restr.emplace_back(std::move(rc), static_cast<int>(p));
  }
  std::sort(restr.begin(), restr.end());

  std::vector<Morphism> xb;
  for (auto& [mp, rep] : restr) {
    Morphism c{B, B, mp};
    Report pres = c.preserves(Signature::lm());
    if (!pres.ok())
      throw InternalCheckError("restricted constant is not an endomorphism");
    for (int k = 0; k < B->size(); ++k)
      if (c(B->ex(k)) != B->ex(k) || B->ex(c(k)) != c(k))
        throw InternalCheckError("restriction is not a constant of the center");
    xb.push_back(std::move(c));
  }

  std::vector<int> embed(L->size(), -1);
  for (int x = 0; x < L->size(); ++x)
    if (center.from_parent[x] >= 0) embed[x] = center.from_parent[x];
  PsiResult psi = psi_embedding(L, B, embed, xb, caps);

  // reindexing is well defined: entries of tau* o Omega agree across each
  // restriction fiber
  for (int x = 0; x < L->size(); ++x)
    for (size_t p = 0; p < xl.size(); ++p)
      for (size_t q = 0; q < xl.size(); ++q) {
        std::vector<int> rp(B->size()), rq(B->size());
        for (int k = 0; k < B->size(); ++k) {
          rp[k] = center.from_parent[xl[p](center.to_parent[k])];
          rq[k] = center.from_parent[xl[q](center.to_parent[k])];
        }
        if (rp != rq) continue;
        for (int i = 1; i < L->n; ++i)
          for (int j = 1; j < L->m; ++j)
            if (L->sig(i, j, xl[p](x)) != L->sig(i, j, xl[q](x)))
              r.add_once("diagram-fiber",
                         "entries differ across a restriction fiber");
      }

  // P o tau* o Omega = Psi, compared cell by cell in the center
  for (int x = 0; x < L->size(); ++x)
    for (size_t t = 0; t < restr.size(); ++t) {
      int rep = restr[t].second;
      for (int i = 1; i < L->n; ++i)
        for (int j = 1; j < L->m; ++j) {
          int cell = (i - 1) * (L->m - 1) + (j - 1);
          // tau(c(x))(i,j) = sigma_ij(c(x)), an element of the center
          int lhs = center.from_parent[L->sig(i, j, xl[rep](x))];
          int rhs = psi.values[x][t][cell];  // already a center index
          if (lhs != rhs) {
            r.add_once("diagram", "differs at " + L->name(x));
          }
        }
    }
  return r;
}

}  // namespace mlmw
