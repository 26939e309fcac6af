#include "mlmw/duality.hpp"

#include <algorithm>

#include "mlmw/congruence.hpp"
#include "mlmw/lm.hpp"
#include "mlmw/quantifier.hpp"

namespace mlmw {

// ---------------------------------------------------------------------------
// MlmSpace
// ---------------------------------------------------------------------------

ElementSet MlmSpace::saturate(const ElementSet& s) const {
  ElementSet out = ElementSet::empty(size());
  for (int x = 0; x < size(); ++x)
    for (int y : s.elements())
      if (E.same(x, y)) out.insert(x);
  return out;
}

ElementSet MlmSpace::preimage(int i, int j, const ElementSet& s) const {
  ElementSet out = ElementSet::empty(size());
  for (int x = 0; x < size(); ++x)
    if (s.contains(fi(i, j, x))) out.insert(x);
  return out;
}

ElementSet MlmSpace::g_preimage(const ElementSet& s) const {
  ElementSet out = ElementSet::empty(size());
  for (int x = 0; x < size(); ++x)
    if (s.contains(g(x))) out.insert(x);
  return out;
}

Report MlmSpace::check_shape() const {
  Report r;
  const int sz = size();
  if (sz < 1) r.add("shape", "no points");
  if (n < 2 || m < 2) r.add("shape", "n and m must be >= 2");
  if (leq.size() != sz) r.add("shape", "order matrix has wrong size");
  if (g.size() != sz) r.add("shape", "g table has wrong length");
  if (static_cast<int>(f.size()) != (n - 1) * (m - 1))
    r.add("shape", "f family must have (n-1)*(m-1) tables");
  else
    for (const auto& t : f)
      if (t.size() != sz) r.add("shape", "f table has wrong length");
  if (static_cast<int>(E.block_of.size()) != sz)
    r.add("shape", "E has wrong length");
  return r;
}

Report check_mlm_space(const MlmSpace& X, const Caps& caps) {
  Report shape = X.check_shape();
  if (!shape.ok()) throw StructuralError(shape.items.front().detail);
  Report r = validate_poset(X.leq);
  const int sz = X.size();
  auto nm = [&](int x) { return X.points.name(x); };

  // E1 (finite De Morgan space): g is an order-reversing involution.
  for (int x = 0; x < sz; ++x)
    if (X.g(X.g(x)) != x) r.add_once("E1", "g not involutive at " + nm(x));
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      if (X.leq.le(x, y) && !X.leq.le(X.g(y), X.g(x)))
        r.add_once("E1", "g not order-reversing at " + nm(x) + "," + nm(y));
  // E2: each f_ij monotone (continuity is vacuous on finite discrete spaces).
  for (int i = 1; i < X.n; ++i)
    for (int j = 1; j < X.m; ++j)
      for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y)
          if (X.leq.le(x, y) && !X.leq.le(X.fi(i, j, x), X.fi(i, j, y)))
            r.add_once("E2", "f(" + std::to_string(i) + "," +
                                 std::to_string(j) + ") at " + nm(x));
  for (int i = 1; i < X.n; ++i)
    for (int j = 1; j < X.m; ++j)
      for (int x = 0; x < sz; ++x) {
        if (i + 1 < X.n && !X.leq.le(X.fi(i, j, x), X.fi(i + 1, j, x)))
          r.add_once("E3", nm(x));
        if (j + 1 < X.m && !X.leq.le(X.fi(i, j, x), X.fi(i, j + 1, x)))
          r.add_once("E4", nm(x));
        for (int rr = 1; rr < X.n; ++rr)
          for (int ss = 1; ss < X.m; ++ss)
            if (X.fi(i, j, X.fi(rr, ss, x)) != X.fi(i, j, x))
              r.add_once("E5", nm(x));
        if (X.fi(i, j, X.g(x)) != X.fi(i, j, x)) r.add_once("E6", nm(x));
        if (X.g(X.fi(i, j, x)) != X.fi(X.n - i, X.m - j, x))
          r.add_once("E7", nm(x));
      }

  std::vector<ElementSet> upsets = enumerate_upsets(X.leq, caps);
  // E8: the joint f-preimage profile separates up-sets. Sorting the
  // profiles keeps this near-linear in the number of up-sets.
  {
    std::vector<std::pair<std::vector<uint64_t>, size_t>> profiles;
    profiles.reserve(upsets.size());
    for (size_t a = 0; a < upsets.size(); ++a) {
      std::vector<uint64_t> prof;
      for (int i = 1; i < X.n; ++i)
        for (int j = 1; j < X.m; ++j)
          prof.push_back(X.preimage(i, j, upsets[a]).mask);
      profiles.emplace_back(std::move(prof), a);
    }
    std::sort(profiles.begin(), profiles.end());
    for (size_t k = 1; k < profiles.size(); ++k)
      if (profiles[k].first == profiles[k - 1].first) {
        r.add_once("E8",
                   upsets[profiles[k - 1].second].to_string(X.points) +
                       " vs " + upsets[profiles[k].second].to_string(X.points));
      }
  }
  // ml1: saturation preserves up-sets.
  for (const ElementSet& u : upsets) {
    ElementSet sat = X.saturate(u);
    for (int x : sat.elements())
      for (int y = 0; y < sz; ++y)
        if (X.leq.le(x, y) && !sat.contains(y))
          r.add_once("ml1", u.to_string(X.points));
  }
  // ml2 is vacuous on a finite discrete space: every class is closed.
  // ml3: f-preimage commutes with saturation on up-sets.
  for (const ElementSet& u : upsets)
    for (int i = 1; i < X.n; ++i)
      for (int j = 1; j < X.m; ++j)
        if (!(X.preimage(i, j, X.saturate(u)) ==
              X.saturate(X.preimage(i, j, u))))
          r.add_once("ml3", "f(" + std::to_string(i) + "," +
                                std::to_string(j) + ") at " +
                                u.to_string(X.points));
  return r;
}

// ---------------------------------------------------------------------------
// dual algebra
// ---------------------------------------------------------------------------

FiniteAlgebra dual_algebra(const MlmSpace& X, const Caps& caps) {
  Report space_ok = check_mlm_space(X, caps);
  if (!space_ok.ok())
    throw RejectedInput("not a valid space: " + space_ok.items.front().law);
  std::vector<ElementSet> upsets = enumerate_upsets(X.leq, caps);
  if (static_cast<int>(upsets.size()) > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "dual algebra would have " +
                          std::to_string(upsets.size()) +
                          " elements, exceeding cap-carrier=" +
                          std::to_string(caps.carrier));
  const int sz = static_cast<int>(upsets.size());
  auto index_of = [&](const ElementSet& s) {
    auto it = std::lower_bound(upsets.begin(), upsets.end(), s);
    if (it == upsets.end() || !(*it == s))
      throw InternalCheckError("dual operation leaves the up-set lattice");
    return static_cast<int>(it - upsets.begin());
  };

  FiniteAlgebra D;
  D.n = X.n;
  D.m = X.m;
  D.carrier.names.reserve(sz);
  for (const ElementSet& u : upsets)
    D.carrier.names.push_back(u.to_string(X.points));
  D.leq.leq.assign(sz, std::vector<bool>(sz, false));
  D.meet.table.assign(sz, std::vector<int>(sz, 0));
  D.join.table.assign(sz, std::vector<int>(sz, 0));
  D.neg.map.assign(sz, 0);
  for (int a = 0; a < sz; ++a) {
    D.neg.map[a] = index_of(X.g_preimage(upsets[a]).complement());
    for (int b = 0; b < sz; ++b) {
      D.leq.leq[a][b] = upsets[a].subset_of(upsets[b]);
      D.meet.table[a][b] = index_of(upsets[a].intersect(upsets[b]));
      D.join.table[a][b] = index_of(upsets[a].unite(upsets[b]));
    }
  }
  for (int i = 1; i < X.n; ++i)
    for (int j = 1; j < X.m; ++j) {
      OpTable1 t;
      t.map.assign(sz, 0);
      for (int a = 0; a < sz; ++a) t.map[a] = index_of(X.preimage(i, j, upsets[a]));
      D.sigma.push_back(std::move(t));
    }
  OpTable1 ex;
  ex.map.assign(sz, 0);
  for (int a = 0; a < sz; ++a) ex.map[a] = index_of(X.saturate(upsets[a]));
  D.exists = std::move(ex);
  D.bottom = index_of(ElementSet::empty(X.size()));
  D.top = index_of(ElementSet::all(X.size()));

  Report laws = check_de_morgan(D);
  laws.merge(check_lm_axioms(D));
  laws.merge(check_quantifier(D, *D.exists));
  if (!laws.ok())
    throw InternalCheckError("dual algebra fails the axiom suite: " +
                             laws.items.front().law);
  return D;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

Spectrum spectrum(const FiniteAlgebra& L, const Caps& caps) {
  if (!L.has_exists())
    throw StructuralError("spectrum requires a quantifier table");
  if (L.size() < 2)
    throw RejectedInput("spectrum requires at least two elements");
  if (L.size() > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "carrier size " + std::to_string(L.size()) +
                          " exceeds cap-carrier=" + std::to_string(caps.carrier));

  // Prime filters of the lattice reduct, by exhaustive principal-filter scan
  // with the primality test.
  std::vector<ElementSet> primes;
  for (int a = 0; a < L.size(); ++a) {
    if (a == L.bottom) continue;  // improper
    ElementSet f = principal_filter(L, a);
    bool prime = true;
    for (int x = 0; x < L.size() && prime; ++x)
      for (int y = 0; y < L.size() && prime; ++y)
        if (f.contains(L.jn(x, y)) && !f.contains(x) && !f.contains(y))
          prime = false;
    if (prime) primes.push_back(f);
  }
  std::sort(primes.begin(), primes.end());
  const int np = static_cast<int>(primes.size());
  auto point_of = [&](const ElementSet& s) {
    auto it = std::lower_bound(primes.begin(), primes.end(), s);
    if (it == primes.end() || !(*it == s))
      throw InternalCheckError("dual map leaves the prime filter space");
    return static_cast<int>(it - primes.begin());
  };

  Spectrum out;
  out.point_filters = primes;
  MlmSpace& X = out.space;
  X.n = L.n;
  X.m = L.m;
  for (int p = 0; p < np; ++p) X.points.names.push_back("P" + std::to_string(p));
  X.leq.leq.assign(np, std::vector<bool>(np, false));
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q)
      X.leq.leq[p][q] = primes[p].subset_of(primes[q]);
  X.g.map.assign(np, 0);
  for (int p = 0; p < np; ++p) {
    ElementSet img = ElementSet::empty(L.size());
    for (int x = 0; x < L.size(); ++x)
      if (!primes[p].contains(L.ng(x))) img.insert(x);
    X.g.map[p] = point_of(img);
  }
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j) {
      OpTable1 t;
      t.map.assign(np, 0);
      for (int p = 0; p < np; ++p) {
        ElementSet img = ElementSet::empty(L.size());
        for (int x = 0; x < L.size(); ++x)
          if (primes[p].contains(L.sig(i, j, x))) img.insert(x);
        t.map[p] = point_of(img);
      }
      X.f.push_back(std::move(t));
    }
  ElementSet range = ElementSet::empty(L.size());
  for (int x = 0; x < L.size(); ++x)
    if (L.ex(x) == x) range.insert(x);
  X.E.block_of.assign(np, 0);
  for (int p = 0; p < np; ++p) X.E.block_of[p] = p;
  for (int p = 0; p < np; ++p)
    for (int q = p + 1; q < np; ++q)
      if (primes[p].intersect(range) == primes[q].intersect(range))
        X.E.block_of[q] = X.E.block_of[p];
  X.E.normalize();

  out.sigma_map.reserve(L.size());
  for (int a = 0; a < L.size(); ++a) {
    ElementSet s = ElementSet::empty(np);
    for (int p = 0; p < np; ++p)
      if (primes[p].contains(a)) s.insert(p);
    out.sigma_map.push_back(s);
  }

  Report space_ok = check_mlm_space(X, caps);
  if (!space_ok.ok())
    throw InternalCheckError("spectrum is not a valid space: " +
                             space_ok.items.front().law);
  for (int a = 0; a < L.size(); ++a)
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q)
        if (out.sigma_map[a].contains(p) && X.leq.le(p, q) &&
            !out.sigma_map[a].contains(q))
          throw InternalCheckError("sigma_L image is not an up-set");
  return out;
}

// ---------------------------------------------------------------------------
// round trips
// ---------------------------------------------------------------------------

RoundtripCertificate roundtrip_check(const AlgebraRef& L, const Caps& caps) {
  Spectrum spec = spectrum(*L, caps);
  AlgebraRef dual = share(dual_algebra(spec.space, caps));
  std::vector<ElementSet> upsets = enumerate_upsets(spec.space.leq, caps);

  RoundtripCertificate cert{dual, Morphism{L, dual, {}}, {}};
  cert.iso.map.resize(L->size());
  for (int a = 0; a < L->size(); ++a) {
    auto it = std::lower_bound(upsets.begin(), upsets.end(), spec.sigma_map[a]);
    if (it == upsets.end() || !(*it == spec.sigma_map[a])) {
      cert.report.add("iso", "sigma_L(" + L->name(a) + ") is not an up-set");
      return cert;
    }
    cert.iso.map[a] = static_cast<int>(it - upsets.begin());
  }
  cert.report = cert.iso.preserves(Signature::mlm());
  if (!cert.iso.is_bijective()) cert.report.add("iso", "sigma_L not bijective");
  return cert;
}

Report space_roundtrip_check(const MlmSpace& X, const Caps& caps) {
  Report r;
  FiniteAlgebra D = dual_algebra(X, caps);
  Spectrum spec2 = spectrum(D, caps);
  const MlmSpace& Y = spec2.space;
  if (Y.size() != X.size()) {
    r.add("space-roundtrip", "point counts differ");
    return r;
  }
  // canonical map: x -> {U : x in U}, located among the prime filters of D
  std::vector<ElementSet> upsets = enumerate_upsets(X.leq, caps);
  std::vector<int> eps(X.size(), -1);
  for (int x = 0; x < X.size(); ++x) {
    ElementSet pf = ElementSet::empty(D.size());
    for (int u = 0; u < static_cast<int>(upsets.size()); ++u)
      if (upsets[u].contains(x)) pf.insert(u);
    for (int p = 0; p < Y.size(); ++p)
      if (spec2.point_filters[p] == pf) eps[x] = p;
    if (eps[x] < 0) {
      r.add("space-roundtrip", "point has no prime-filter image");
      return r;
    }
  }
  std::vector<bool> hit(Y.size(), false);
  for (int x = 0; x < X.size(); ++x) hit[eps[x]] = true;
  for (bool h : hit)
    if (!h) r.add_once("space-roundtrip", "not surjective");
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (X.leq.le(x, y) != Y.leq.le(eps[x], eps[y]))
        r.add_once("space-roundtrip", "order not preserved");
  for (int x = 0; x < X.size(); ++x) {
    if (eps[X.g(x)] != Y.g(eps[x]))
      r.add_once("space-roundtrip", "g not preserved");
    for (int i = 1; i < X.n; ++i)
      for (int j = 1; j < X.m; ++j)
        if (eps[X.fi(i, j, x)] != Y.fi(i, j, eps[x]))
          r.add_once("space-roundtrip", "f not preserved");
    for (int y = 0; y < X.size(); ++y)
      if (X.E.same(x, y) != Y.E.same(eps[x], eps[y]))
        r.add_once("space-roundtrip", "E not preserved");
  }
  return r;
}

// ---------------------------------------------------------------------------
// semimodal subsets and congruences
// ---------------------------------------------------------------------------

Partition theta_of(const FiniteAlgebra& L, const Spectrum& spec,
                   const ElementSet& Y) {
  const int sz = L.size();
  Partition p;
  p.block_of.resize(sz);
  for (int x = 0; x < sz; ++x) p.block_of[x] = x;
  for (int x = 0; x < sz; ++x)
    for (int y = x + 1; y < sz; ++y)
      if (spec.sigma_map[x].intersect(Y) == spec.sigma_map[y].intersect(Y))
        p.block_of[y] = p.block_of[x];
  p.normalize();
  return p;
}

SemimodalAnalysis closed_semimodal_sets(const FiniteAlgebra& L,
                                        const Caps& caps) {
  SemimodalAnalysis out{spectrum(L, caps), {}, {}, {}};
  const MlmSpace& X = out.spec.space;
  const int np = X.size();
  const uint64_t limit = uint64_t{1} << np;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    ElementSet Y = ElementSet::from_mask(np, mask);
    ElementSet gimg = ElementSet::empty(np);
    for (int x : Y.elements()) gimg.insert(X.g(x));
    if (!(gimg == Y)) continue;  // involutive
    bool semimodal = true;
    for (int x : Y.elements())
      for (int i = 1; i < X.n && semimodal; ++i)
        for (int j = 1; j < X.m && semimodal; ++j)
          semimodal = Y.contains(X.fi(i, j, x));
    if (!semimodal) continue;
    if (!(X.saturate(Y) == Y)) continue;  // E-saturated
    out.sets.push_back(Y);
    out.thetas.push_back(theta_of(L, out.spec, Y));
  }

  Report& r = out.report;
  CongruenceLattice lat = all_congruences(L, caps);
  if (static_cast<int>(out.sets.size()) != lat.size())
    r.add("semimodal-count", std::to_string(out.sets.size()) + " sets vs " +
                                 std::to_string(lat.size()) + " congruences");
  for (size_t k = 0; k < out.sets.size(); ++k) {
    if (lat.index_of(out.thetas[k]) < 0)
      r.add_once("semimodal-theta", "Theta(Y) is not a congruence");
  }
  for (size_t a = 0; a < out.sets.size(); ++a)
    for (size_t b = 0; b < out.sets.size(); ++b) {
      if (a != b && out.thetas[a] == out.thetas[b])
        r.add_once("semimodal-bijection", "Theta not injective");
      bool yinc = out.sets[a].subset_of(out.sets[b]);
      bool tinc = out.thetas[b].refines(out.thetas[a]);
      if (yinc != tinc) r.add_once("semimodal-order", "order reversal fails");
    }
  // inverse: delta -> {P : [1]_delta subset of P}
  for (const Partition& delta : lat.elements) {
    ElementSet cls = ElementSet::empty(L.size());
    for (int x = 0; x < L.size(); ++x)
      if (delta.same(x, L.top)) cls.insert(x);
    ElementSet Y = ElementSet::empty(np);
    for (int p = 0; p < np; ++p)
      if (cls.subset_of(out.spec.point_filters[p])) Y.insert(p);
    auto it = std::find(out.sets.begin(), out.sets.end(), Y);
    if (it == out.sets.end()) {
      r.add_once("semimodal-inverse", "image set not semimodal");
      continue;
    }
    if (!(out.thetas[it - out.sets.begin()] == delta))
      r.add_once("semimodal-inverse", "inverse does not recover delta");
  }
  return out;
}

PrincipalSubsetResult principal_subset(const FiniteAlgebra& L, int a, int b,
                                       const Caps& caps) {
  PrincipalSubsetResult out;
  if (!L.le(a, b)) {
    // theta(a,b) = theta(a^b, avb), so normalize to a comparable pair
    int lo = L.mt(a, b), hi = L.jn(a, b);
    a = lo;
    b = hi;
    out.normalized = true;
  }
  Spectrum spec = spectrum(L, caps);
  const MlmSpace& X = spec.space;
  int w = L.fa(delta(L, a, b));
  ElementSet lhs = spec.sigma_map[w];

  ElementSet diff = spec.sigma_map[b].minus(spec.sigma_map[a]);
  ElementSet sat = X.saturate(diff);
  ElementSet cup = ElementSet::empty(X.size());
  for (int i = 1; i < X.n; ++i)
    for (int j = 1; j < X.m; ++j) cup = cup.unite(X.preimage(i, j, sat));
  ElementSet rhs = cup.complement();

  if (!(lhs == rhs))
    out.report.add("principal-subset-identity",
                   lhs.to_string(X.points) + " vs " + rhs.to_string(X.points));
  Partition expected = principal_congruence(L, a, b);
  if (!(theta_of(L, spec, lhs) == expected))
    out.report.add("principal-subset-theta",
                   "Theta(Y) differs from theta(a,b)");
  out.points = lhs;
  return out;
}

// ---------------------------------------------------------------------------
// space isomorphism search
// ---------------------------------------------------------------------------

namespace {

bool space_iso_consistent(const MlmSpace& A, const MlmSpace& B,
                          const std::vector<int>& map, int decided) {
  for (int x = 0; x < decided; ++x) {
    if (A.g(x) < decided && map[A.g(x)] != B.g(map[x])) return false;
    for (int i = 1; i < A.n; ++i)
      for (int j = 1; j < A.m; ++j) {
        int fx = A.fi(i, j, x);
        if (fx < decided && map[fx] != B.fi(i, j, map[x])) return false;
      }
    for (int y = 0; y < decided; ++y) {
      if (A.leq.le(x, y) != B.leq.le(map[x], map[y])) return false;
      if (A.E.same(x, y) != B.E.same(map[x], map[y])) return false;
    }
  }
  return true;
}

bool space_iso_search(const MlmSpace& A, const MlmSpace& B,
                      std::vector<int>& map, std::vector<bool>& used,
                      int pos) {
  if (pos == A.size()) return true;
  for (int v = 0; v < A.size(); ++v) {
    if (used[v]) continue;
    map[pos] = v;
    used[v] = true;
    if (space_iso_consistent(A, B, map, pos + 1) &&
        space_iso_search(A, B, map, used, pos + 1))
      return true;
    used[v] = false;
  }
  map[pos] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_space_isomorphism(const MlmSpace& A,
                                                       const MlmSpace& B) {
  if (A.size() != B.size() || A.n != B.n || A.m != B.m) return std::nullopt;
  std::vector<int> map(A.size(), -1);
  std::vector<bool> used(A.size(), false);
  if (space_iso_search(A, B, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace mlmw
