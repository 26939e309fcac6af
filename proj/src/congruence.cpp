#include "mlmw/congruence.hpp"

#include <algorithm>

#include "mlmw/lm.hpp"

namespace mlmw {

namespace {

std::string pair_name(const FiniteAlgebra& L, int a, int b) {
  return L.name(a) + "," + L.name(b);
}

void require_exists(const FiniteAlgebra& L) {
  if (!L.has_exists())
    throw StructuralError("operation requires a quantifier table");
}

void check_carrier_cap(const FiniteAlgebra& L, const Caps& caps) {
  if (L.size() > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "carrier size " + std::to_string(L.size()) +
                          " exceeds cap-carrier=" + std::to_string(caps.carrier));
}

// Principal up-sets inside a subuniverse, i.e. all filters of the subalgebra
// on `sub` (every filter of a finite lattice is principal).
std::vector<ElementSet> filters_within(const FiniteAlgebra& L,
                                       const ElementSet& sub) {
  std::vector<ElementSet> out;
  for (int a : sub.elements()) {
    ElementSet f = ElementSet::empty(L.size());
    for (int x : sub.elements())
      if (L.le(a, x)) f.insert(x);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool closed_under(const FiniteAlgebra& L, const ElementSet& f,
                  int (FiniteAlgebra::*op)(int) const) {
  for (int x : f.elements())
    if (!f.contains((L.*op)(x))) return false;
  return true;
}

std::vector<std::pair<int, int>> related_pairs(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (p.same(x, y)) out.emplace_back(x, y);
  return out;
}

bool compatible_with_all_ops(const FiniteAlgebra& L, const Partition& p) {
  auto unaries = L.unary_ops();
  auto binaries = L.binary_ops();
  for (int x = 0; x < L.size(); ++x)
    for (int y = x + 1; y < L.size(); ++y) {
      if (!p.same(x, y)) continue;
      for (const auto& [nm, u] : unaries)
        if (!p.same((*u)(x), (*u)(y))) return false;
      for (const auto& [nm, b] : binaries)
        for (int z = 0; z < L.size(); ++z)
          if (!p.same((*b)(x, z), (*b)(y, z)) ||
              !p.same((*b)(z, x), (*b)(z, y)))
            return false;
    }
  return true;
}

}  // namespace

ElementSet range_center(const FiniteAlgebra& L) {
  require_exists(L);
  ElementSet range = ElementSet::empty(L.size());
  for (int x = 0; x < L.size(); ++x)
    if (L.ex(x) == x) range.insert(x);
  ElementSet out = ElementSet::empty(L.size());
  for (int b : range.elements())
    for (int c : range.elements())
      if (L.mt(b, c) == L.bottom && L.jn(b, c) == L.top) {
        out.insert(b);
        break;
      }
  return out;
}

Report check_ms_filter(const FiniteAlgebra& L, const ElementSet& F) {
  require_exists(L);
  Report r;
  if (F.is_empty()) {
    r.add("filter", "empty");
    return r;
  }
  for (int x : F.elements())
    for (int y = 0; y < L.size(); ++y)
      if (L.le(x, y) && !F.contains(y)) r.add_once("filter", "not an up-set");
  for (int x : F.elements())
    for (int y : F.elements())
      if (!F.contains(L.mt(x, y)))
        r.add_once("filter", "not meet-closed at " + pair_name(L, x, y));
  for (int x : F.elements())
    if (!F.contains(L.sig(1, 1, x))) {
      r.add_once("stone", "sigma_11(" + L.name(x) + ") escapes");
      break;
    }
  for (int x : F.elements())
    if (!F.contains(L.fa(x))) {
      r.add_once("ms", "forall(" + L.name(x) + ") escapes");
      break;
    }
  return r;
}

std::vector<ElementSet> ms_filters(const FiniteAlgebra& L, const Caps& caps) {
  require_exists(L);
  check_carrier_cap(L, caps);
  std::vector<ElementSet> out;
  for (int a = 0; a < L.size(); ++a) {
    ElementSet f = principal_filter(L, a);
    if (check_ms_filter(L, f).ok()) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  // Independent route: monadic deductive systems by subset scan.
  if (L.size() <= 16) {
    std::vector<ElementSet> mds;
    for (const ElementSet& d : deductive_systems(L, caps)) {
      bool closed = true;
      for (int x : d.elements())
        if (!d.contains(L.fa(x))) {
          closed = false;
          break;
        }
      if (closed) mds.push_back(d);
    }
    std::sort(mds.begin(), mds.end());
    if (!(mds == out))
      throw InternalCheckError(
          "ms-filters and monadic deductive systems disagree");
  }
  return out;
}

Partition congruence_from_filter(const FiniteAlgebra& L, const ElementSet& F) {
  Report r = check_ms_filter(L, F);
  if (!r.ok())
    throw RejectedInput("not an ms-filter: " + r.items.front().law + " (" +
                        r.items.front().detail + ")");
  const int sz = L.size();
  Partition p;
  p.block_of.assign(sz, 0);
  for (int x = 0; x < sz; ++x) p.block_of[x] = x;
  for (int x = 0; x < sz; ++x)
    for (int y = x + 1; y < sz; ++y) {
      bool related = false;
      for (int f : F.elements())
        if (L.mt(x, f) == L.mt(y, f)) {
          related = true;
          break;
        }
      if (related) p.block_of[y] = p.block_of[x];
    }
  p.normalize();
  if (!compatible_with_all_ops(L, p))
    throw InternalCheckError("R(F) is not compatible with some operation");
  return p;
}

std::vector<Partition> oracle_congruences(const FiniteAlgebra& L) {
  const int sz = L.size();
  std::vector<Partition> found{Partition::identity(sz)};
  std::vector<Partition> queue = found;
  while (!queue.empty()) {
    Partition base = queue.back();
    queue.pop_back();
    auto gens = related_pairs(base);
    for (int a = 0; a < sz; ++a)
      for (int b = a + 1; b < sz; ++b) {
        if (base.same(a, b)) continue;
        auto pairs = gens;
        pairs.emplace_back(a, b);
        Partition bigger = congruence_closure(L, pairs);
        if (std::find(found.begin(), found.end(), bigger) == found.end()) {
          found.push_back(bigger);
          queue.push_back(bigger);
        }
      }
  }
  std::sort(found.begin(), found.end());
  return found;
}

int CongruenceLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements.begin());
}

CongruenceLattice all_congruences(const FiniteAlgebra& L, const Caps& caps) {
  require_exists(L);
  check_carrier_cap(L, caps);
  std::vector<ElementSet> filters = ms_filters(L, caps);
  std::vector<Partition> via_filters;
  for (const ElementSet& F : filters)
    via_filters.push_back(congruence_from_filter(L, F));
  std::sort(via_filters.begin(), via_filters.end());
  via_filters.erase(std::unique(via_filters.begin(), via_filters.end()),
                    via_filters.end());

  std::vector<Partition> oracle = oracle_congruences(L);
  if (!(via_filters == oracle))
    throw InternalCheckError(
        "filter congruences differ from the closure oracle set");

  // Round trips: [1]_{R(F)} = F and R([1]_theta) = theta, and both maps
  // are monotone, so the lattices are order isomorphic.
  for (const ElementSet& F : filters) {
    Partition theta = congruence_from_filter(L, F);
    ElementSet cls = ElementSet::empty(L.size());
    for (int x = 0; x < L.size(); ++x)
      if (theta.same(x, L.top)) cls.insert(x);
    if (!(cls == F))
      throw InternalCheckError("[1]_{R(F)} differs from F");
  }
  for (const Partition& theta : oracle) {
    ElementSet cls = ElementSet::empty(L.size());
    for (int x = 0; x < L.size(); ++x)
      if (theta.same(x, L.top)) cls.insert(x);
    if (!(congruence_from_filter(L, cls) == theta))
      throw InternalCheckError("R([1]_theta) differs from theta");
  }
  for (size_t i = 0; i < filters.size(); ++i)
    for (size_t j = 0; j < filters.size(); ++j) {
      bool finc = filters[i].subset_of(filters[j]);
      bool cinc = congruence_from_filter(L, filters[i])
                      .refines(congruence_from_filter(L, filters[j]));
      if (finc != cinc)
        throw InternalCheckError("filter order differs from congruence order");
    }

  CongruenceLattice lat;
  lat.elements = std::move(oracle);
  for (const Partition& a : lat.elements)
    for (const Partition& b : lat.elements) {
      if (lat.index_of(Partition::meet(a, b)) < 0 ||
          lat.index_of(Partition::join(a, b)) < 0)
        throw InternalCheckError("congruence set not lattice-closed");
    }
  if (lat.index_of(Partition::identity(L.size())) < 0 ||
      lat.index_of(Partition::total(L.size())) < 0)
    throw InternalCheckError("congruence set lacks identity or total");
  return lat;
}

ElementSet monadic_ds_generated(const FiniteAlgebra& L, const ElementSet& H) {
  require_exists(L);
  ElementSet gens = ElementSet::empty(L.size());
  for (int h : H.elements()) gens.insert(L.sig(1, 1, L.fa(h)));
  ElementSet result = filter_generated(L, gens);

  ElementSet forall_h = ElementSet::empty(L.size());
  for (int h : H.elements()) forall_h.insert(L.fa(h));
  if (!(deductive_closure(L, forall_h) == result))
    throw InternalCheckError(
        "F(sigma_11 forall H) differs from D(forall H)");

  // Oracle: intersection of all ms-filters containing H.
  ElementSet oracle = ElementSet::all(L.size());
  for (int a = 0; a < L.size(); ++a) {
    ElementSet f = principal_filter(L, a);
    if (H.subset_of(f) && check_ms_filter(L, f).ok())
      oracle = oracle.intersect(f);
  }
  if (!(oracle == result))
    throw InternalCheckError(
        "generated m.d.s. differs from the intersection oracle");
  return result;
}

// ---------------------------------------------------------------------------
// gamma diagram
// ---------------------------------------------------------------------------

namespace {

int find_set(const std::vector<ElementSet>& family, const ElementSet& s) {
  auto it = std::lower_bound(family.begin(), family.end(), s);
  if (it == family.end() || !(*it == s)) return -1;
  return static_cast<int>(it - family.begin());
}

void check_order_iso(const std::vector<ElementSet>& dom,
                     const std::vector<ElementSet>& cod,
                     const std::vector<int>& img, const std::string& name,
                     Report& r) {
  if (dom.size() != cod.size()) {
    r.add(name, "families have different sizes");
    return;
  }
  std::vector<bool> hit(cod.size(), false);
  for (size_t i = 0; i < dom.size(); ++i) {
    if (img[i] < 0) {
      r.add_once(name, "image escapes the codomain family");
      return;
    }
    if (hit[img[i]]) r.add_once(name, "not injective");
    hit[img[i]] = true;
  }
  for (size_t i = 0; i < dom.size(); ++i)
    for (size_t j = 0; j < dom.size(); ++j) {
      bool d = dom[i].subset_of(dom[j]);
      bool c = cod[img[i]].subset_of(cod[img[j]]);
      if (d != c) r.add_once(name, "not an order isomorphism");
    }
}

}  // namespace

GammaDiagram gamma_diagram(const FiniteAlgebra& L, const Caps& caps) {
  require_exists(L);
  check_carrier_cap(L, caps);
  GammaDiagram g;
  const int sz = L.size();

  ElementSet range = ElementSet::empty(sz);
  for (int x = 0; x < sz; ++x)
    if (L.ex(x) == x) range.insert(x);
  ElementSet center = boolean_center(L);
  ElementSet rcenter = range_center(L);

  g.dm = ms_filters(L, caps);
  // deductive systems of the subalgebra exists(L) = its Stone filters
  for (const ElementSet& f : filters_within(L, range)) {
    bool stone = true;
    for (int x : f.elements()) stone = stone && f.contains(L.sig(1, 1, x));
    if (stone) g.d_range.push_back(f);
  }
  {
    // same family through the extracted subalgebra, which re-runs the
    // deductive-system cross-check on its own carrier
    Subalgebra sub = induced_subalgebra(L, range, true);
    std::vector<ElementSet> via_sub;
    for (const ElementSet& f : stone_filters(*sub.algebra, caps)) {
      ElementSet lifted = ElementSet::empty(sz);
      for (int k : f.elements()) lifted.insert(sub.to_parent[k]);
      via_sub.push_back(lifted);
    }
    std::sort(via_sub.begin(), via_sub.end());
    std::vector<ElementSet> direct = g.d_range;
    std::sort(direct.begin(), direct.end());
    if (!(via_sub == direct))
      throw InternalCheckError(
          "range deductive systems differ between the two routes");
  }
  // monadic filters of the center: filters closed under forall
  for (const ElementSet& f : filters_within(L, center))
    if (closed_under(L, f, &FiniteAlgebra::fa)) g.fm_center.push_back(f);
  g.f_rcenter = filters_within(L, rcenter);
  std::sort(g.d_range.begin(), g.d_range.end());
  std::sort(g.fm_center.begin(), g.fm_center.end());
  std::sort(g.f_rcenter.begin(), g.f_rcenter.end());

  std::vector<int> g1(g.dm.size()), g2(g.dm.size());
  for (size_t i = 0; i < g.dm.size(); ++i) {
    g1[i] = find_set(g.d_range, g.dm[i].intersect(range));
    g2[i] = find_set(g.fm_center, g.dm[i].intersect(center));
  }
  std::vector<int> g3(g.d_range.size()), g4(g.fm_center.size());
  for (size_t i = 0; i < g.d_range.size(); ++i)
    g3[i] = find_set(g.f_rcenter, g.d_range[i].intersect(rcenter));
  for (size_t i = 0; i < g.fm_center.size(); ++i)
    g4[i] = find_set(g.f_rcenter, g.fm_center[i].intersect(rcenter));

  check_order_iso(g.dm, g.d_range, g1, "gamma1", g.report);
  check_order_iso(g.dm, g.fm_center, g2, "gamma2", g.report);
  check_order_iso(g.d_range, g.f_rcenter, g3, "gamma3", g.report);
  check_order_iso(g.fm_center, g.f_rcenter, g4, "gamma4", g.report);
  if (g.report.ok())
    for (size_t i = 0; i < g.dm.size(); ++i)
      if (g3[g1[i]] != g4[g2[i]]) {
        g.report.add("gamma-square", "gamma3 o gamma1 != gamma4 o gamma2");
        break;
      }
  return g;
}

// ---------------------------------------------------------------------------
// simplicity
// ---------------------------------------------------------------------------

SimplicityCertificate simplicity(const FiniteAlgebra& L, const Caps& caps) {
  require_exists(L);
  check_carrier_cap(L, caps);
  SimplicityCertificate cert;
  if (L.size() == 1) {
    cert.degenerate = true;
    cert.simple = false;
    cert.range_center_size = 1;
    return cert;
  }
  CongruenceLattice lat = all_congruences(L, caps);
  bool via_count = lat.size() == 2;

  ElementSet range = ElementSet::empty(L.size());
  for (int x = 0; x < L.size(); ++x)
    if (L.ex(x) == x) range.insert(x);
  int range_stone = 0;
  for (const ElementSet& f : filters_within(L, range)) {
    bool stone = true;
    for (int x : f.elements()) stone = stone && f.contains(L.sig(1, 1, x));
    if (stone) ++range_stone;
  }
  bool via_range = range_stone == 2;

  cert.range_center_size = range_center(L).count();
  bool via_center = cert.range_center_size == 2;

  // subdirect irreducibility: a least nontrivial congruence exists
  Partition monolith = Partition::total(L.size());
  bool have_nontrivial = false;
  for (const Partition& p : lat.elements) {
    if (p.is_identity()) continue;
    have_nontrivial = true;
    monolith = Partition::meet(monolith, p);
  }
  bool via_monolith = have_nontrivial && !monolith.is_identity();
  if (via_monolith) cert.monolith = monolith;

  // For these algebras simplicity and subdirect irreducibility coincide;
  // all four routes must agree.
  if (via_count != via_range || via_count != via_center ||
      via_count != via_monolith)
    throw InternalCheckError("simplicity routes disagree");
  cert.simple = via_count;
  if (!cert.simple)
    for (const Partition& p : lat.elements)
      if (!p.is_identity() && !p.is_total()) {
        cert.proper_nontrivial = p;
        break;
      }
  return cert;
}

bool is_simple(const FiniteAlgebra& L, const Caps& caps) {
  return simplicity(L, caps).simple;
}

bool is_subdirectly_irreducible(const FiniteAlgebra& L, const Caps& caps) {
  return simplicity(L, caps).simple;
}

// ---------------------------------------------------------------------------
// discriminator
// ---------------------------------------------------------------------------

int discriminator(const FiniteAlgebra& L, int x, int y, int z) {
  require_exists(L);
  int w = L.fa(delta(L, x, y));
  return L.jn(L.mt(w, z), L.mt(L.ng(w), x));
}

Report certify_discriminator(const FiniteAlgebra& L, const Caps& caps) {
  require_exists(L);
  check_carrier_cap(L, caps);
  Report r;
  const int sz = L.size();
  for (int x = 0; x < sz; ++x)
    for (int z = 0; z < sz; ++z)
      if (discriminator(L, x, x, z) != z)
        r.add_once("discriminator-equal", pair_name(L, x, z));
  SimplicityCertificate cert = simplicity(L, caps);
  if (cert.simple)
    for (int x = 0; x < sz; ++x)
      for (int y = 0; y < sz; ++y) {
        if (x == y) continue;
        for (int z = 0; z < sz; ++z)
          if (discriminator(L, x, y, z) != x)
            r.add_once("discriminator-distinct",
                       L.name(x) + "," + L.name(y) + "," + L.name(z));
      }
  return r;
}

Report discriminator_consequences(const FiniteAlgebra& L, const Caps& caps) {
  require_exists(L);
  check_carrier_cap(L, caps);
  Report r;
  const int sz = L.size();
  CongruenceLattice lat = all_congruences(L, caps);

  // (i) permutability and distributivity
  for (const Partition& a : lat.elements)
    for (const Partition& b : lat.elements)
      if (Partition::compose(a, b) != Partition::compose(b, a))
        r.add_once("permutability", "congruence pair");
  for (const Partition& a : lat.elements)
    for (const Partition& b : lat.elements)
      for (const Partition& c : lat.elements)
        if (!(Partition::meet(a, Partition::join(b, c)) ==
              Partition::join(Partition::meet(a, b), Partition::meet(a, c))))
          r.add_once("con-distributivity", "congruence triple");

  // (ii) equationally definable principal congruences
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      Partition theta = principal_congruence(L, a, b);
      for (int c = 0; c < sz; ++c)
        for (int d = 0; d < sz; ++d) {
          bool in_theta = theta.same(c, d);
          bool eq = discriminator(L, a, b, c) == discriminator(L, a, b, d);
          if (in_theta != eq)
            r.add_once("edpc", L.name(a) + "," + L.name(b) + "," + L.name(c) +
                                   "," + L.name(d));
        }
    }

  // principal congruences, deduplicated
  std::vector<Partition> principal;
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      principal.push_back(principal_congruence(L, a, b));
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()),
                  principal.end());

  // (iii) every principal congruence is a factor congruence
  for (const Partition& theta : principal) {
    bool found = false;
    for (const Partition& other : lat.elements) {
      if (!Partition::meet(theta, other).is_identity()) continue;
      auto comp = Partition::compose(theta, other);
      bool total = true;
      for (const auto& row : comp)
        for (bool v : row) total = total && v;
      if (total) {
        found = true;
        break;
      }
    }
    if (!found) r.add_once("factor-congruence", "no permuting complement");
  }

  // (iv) principal congruences closed under join and meet
  for (const Partition& a : principal)
    for (const Partition& b : principal) {
      if (std::find(principal.begin(), principal.end(),
                    Partition::join(a, b)) == principal.end())
        r.add_once("principal-sublattice", "join escapes");
      if (std::find(principal.begin(), principal.end(),
                    Partition::meet(a, b)) == principal.end())
        r.add_once("principal-sublattice", "meet escapes");
    }
  return r;
}

// ---------------------------------------------------------------------------
// principal congruences
// ---------------------------------------------------------------------------

namespace {

Partition theta_by_witness(const FiniteAlgebra& L, int w) {
  const int sz = L.size();
  Partition p;
  p.block_of.assign(sz, 0);
  for (int x = 0; x < sz; ++x) p.block_of[x] = x;
  for (int x = 0; x < sz; ++x)
    for (int y = x + 1; y < sz; ++y)
      if (L.mt(x, w) == L.mt(y, w)) p.block_of[y] = p.block_of[x];
  p.normalize();
  return p;
}

}  // namespace

Partition principal_congruence(const FiniteAlgebra& L, int a, int b) {
  require_exists(L);
  int w = L.fa(delta(L, a, b));
  Partition p = theta_by_witness(L, w);
  Partition oracle = congruence_closure(L, {{a, b}});
  if (!(p == oracle))
    throw InternalCheckError("theta(a,b) differs from the closure oracle");
  int w2 = L.fa(delta(L, w, L.top));
  if (!(theta_by_witness(L, w2) == p))
    throw InternalCheckError("theta(a,b) differs from theta(forall(a+b),1)");
  return p;
}

PrincipalLatticeResult principal_lattice(const FiniteAlgebra& L,
                                         const Caps& caps) {
  require_exists(L);
  check_carrier_cap(L, caps);
  PrincipalLatticeResult out;
  Report& r = out.report;
  const int sz = L.size();

  // theta(a,b) depends only on w = forall(a+b); cache by witness.
  std::vector<std::vector<int>> wit(sz, std::vector<int>(sz));
  std::vector<std::vector<int>> dl(sz, std::vector<int>(sz));
  std::vector<Partition> theta_of_w(sz, Partition::identity(0));
  std::vector<bool> have(sz, false);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      dl[a][b] = delta(L, a, b);
      int w = L.fa(dl[a][b]);
      wit[a][b] = w;
      if (!have[w]) {
        theta_of_w[w] = theta_by_witness(L, w);
        have[w] = true;
      }
    }

  if (!theta_of_w[wit[L.top][L.top]].is_identity())
    r.add("principal-identity", "theta(1,1) is not the identity");
  if (!theta_of_w[wit[L.bottom][L.top]].is_total())
    r.add("principal-total", "theta(0,1) is not total");

  for (int a = 0; a < sz && r.ok(); ++a)
    for (int b = 0; b < sz; ++b)
      for (int c = 0; c < sz; ++c)
        for (int d = 0; d < sz; ++d) {
          int u = L.jn(dl[a][b], L.fa(dl[c][d]));
          int w = L.fa(delta(L, u, L.top));
          if (!have[w]) {
            theta_of_w[w] = theta_by_witness(L, w);
            have[w] = true;
          }
          if (!(Partition::meet(theta_of_w[wit[a][b]], theta_of_w[wit[c][d]]) ==
                theta_of_w[w])) {
            r.add_once("principal-meet-formula",
                       L.name(a) + "," + L.name(b) + ";" + L.name(c) + "," +
                           L.name(d));
            break;
          }
        }

  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      int w = L.fa(delta(L, L.ng(wit[a][b]), L.top));
      if (!have[w]) {
        theta_of_w[w] = theta_by_witness(L, w);
        have[w] = true;
      }
      const Partition& theta = theta_of_w[wit[a][b]];
      const Partition& comp = theta_of_w[w];
      if (!Partition::meet(theta, comp).is_identity() ||
          !Partition::join(theta, comp).is_total()) {
        r.add_once("principal-complement", pair_name(L, a, b));
      }
    }

  // every principal ms-filter has the form F(forall sigma_11 a)
  std::vector<ElementSet> forms;
  for (int a = 0; a < sz; ++a)
    forms.push_back(principal_filter(L, L.fa(L.sig(1, 1, a))));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<ElementSet> filters = ms_filters(L, caps);
  if (!(forms == filters))
    r.add("principal-filter-form",
          "ms-filters differ from {F(forall sigma_11 a)}");

  std::vector<Partition> principal;
  for (int w = 0; w < sz; ++w)
    if (have[w]) principal.push_back(theta_of_w[w]);
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()),
                  principal.end());
  out.lattice.elements = std::move(principal);
  return out;
}

CongruenceCount count_congruences(const FiniteAlgebra& L, const Caps& caps) {
  require_exists(L);
  check_carrier_cap(L, caps);
  CongruenceCount out;
  ElementSet rc = range_center(L);
  std::vector<int> atoms;
  for (int b : rc.elements()) {
    if (b == L.bottom) continue;
    bool minimal = true;
    for (int c : rc.elements())
      if (c != L.bottom && c != b && L.le(c, b)) minimal = false;
    if (minimal) atoms.push_back(b);
  }
  out.atoms = static_cast<int>(atoms.size());
  out.count = 1ll << out.atoms;
  CongruenceLattice lat = all_congruences(L, caps);
  if (out.count != lat.size())
    out.report.add("count",
                   "2^atoms=" + std::to_string(out.count) + " but |Con|=" +
                       std::to_string(lat.size()));

  // atom lemma
  std::vector<ElementSet> filters = ms_filters(L, caps);
  ElementSet full = ElementSet::all(L.size());
  for (int a = 0; a < L.size(); ++a) {
    int w = L.fa(L.sig(1, 1, a));
    ElementSet F = principal_filter(L, w);
    bool maximal = !(F == full);
    if (maximal)
      for (const ElementSet& G : filters)
        if (!(G == F) && !(G == full) && F.subset_of(G)) maximal = false;
    bool atom = std::find(atoms.begin(), atoms.end(), w) != atoms.end();
    if (maximal != atom) out.report.add_once("atom-lemma", L.name(a));
  }
  return out;
}

Report cep_spot_check(const FiniteAlgebra& L, const ElementSet& members,
                      const Caps& caps) {
  check_carrier_cap(L, caps);
  Report r;
  Subalgebra sub = induced_subalgebra(L, members, L.has_exists());
  std::vector<Partition> sub_cong = oracle_congruences(*sub.algebra);
  std::vector<Partition> big_cong = oracle_congruences(L);
  for (const Partition& theta_s : sub_cong) {
    bool extendable = false;
    for (const Partition& theta : big_cong) {
      Partition restricted;
      restricted.block_of.resize(sub.algebra->size());
      for (int i = 0; i < sub.algebra->size(); ++i)
        restricted.block_of[i] = theta.block_of[sub.to_parent[i]];
      restricted.normalize();
      if (restricted == theta_s) {
        extendable = true;
        break;
      }
    }
    if (!extendable) r.add_once("cep", "congruence with no extension");
  }
  return r;
}

}  // namespace mlmw
