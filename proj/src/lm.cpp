#include "mlmw/lm.hpp"

#include <algorithm>

namespace mlmw {

Report check_de_morgan(const FiniteAlgebra& L) {
  Report r = validate_lattice(L.meet, L.join, L.leq);
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    if (L.ng(L.ng(x)) != x) r.add_once("involution", L.name(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (L.ng(L.jn(x, y)) != L.mt(L.ng(x), L.ng(y)))
        r.add_once("de-morgan", "~(xvy) at " + L.name(x) + "," + L.name(y));
      if (L.ng(L.mt(x, y)) != L.jn(L.ng(x), L.ng(y)))
        r.add_once("de-morgan", "~(x^y) at " + L.name(x) + "," + L.name(y));
    }
  if (L.ng(L.bottom) != L.top || L.ng(L.top) != L.bottom)
    r.add("de-morgan-bounds", "~0 != 1 or ~1 != 0");
  return r;
}

Report check_lm_axioms(const FiniteAlgebra& L) {
  if (static_cast<int>(L.sigma.size()) != (L.n - 1) * (L.m - 1))
    throw StructuralError("sigma family must have (n-1)*(m-1) tables");
  for (const auto& t : L.sigma)
    if (t.size() != L.size())
      throw StructuralError("sigma table has wrong length");

  Report r;
  const int sz = L.size();
  auto ij = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j) {
      for (int x = 0; x < sz; ++x) {
        for (int y = 0; y < sz; ++y)
          if (L.sig(i, j, L.jn(x, y)) != L.jn(L.sig(i, j, x), L.sig(i, j, y)))
            r.add_once("C1", ij(i, j) + " at " + L.name(x) + "," + L.name(y));
        if (i + 1 < L.n && !L.le(L.sig(i, j, x), L.sig(i + 1, j, x)))
          r.add_once("C2", ij(i, j) + " at " + L.name(x));
        if (j + 1 < L.m && !L.le(L.sig(i, j, x), L.sig(i, j + 1, x)))
          r.add_once("C3", ij(i, j) + " at " + L.name(x));
        for (int rr = 1; rr < L.n; ++rr)
          for (int ss = 1; ss < L.m; ++ss)
            if (L.sig(i, j, L.sig(rr, ss, x)) != L.sig(rr, ss, x))
              r.add_once("C4", ij(i, j) + " o " + ij(rr, ss) + " at " +
                                   L.name(x));
        if (L.jn(L.sig(i, j, x), L.ng(L.sig(i, j, x))) != L.top)
          r.add_once("C6", ij(i, j) + " at " + L.name(x));
        if (L.sig(i, j, L.ng(x)) != L.ng(L.sig(L.n - i, L.m - j, x)))
          r.add_once("C7", ij(i, j) + " at " + L.name(x));
      }
    }
  // C5: the joint profile x -> (sigma_ij x)_{ij} is injective.
  for (int x = 0; x < sz; ++x)
    for (int y = x + 1; y < sz; ++y) {
      bool equal = true;
      for (int i = 1; i < L.n && equal; ++i)
        for (int j = 1; j < L.m && equal; ++j)
          equal = L.sig(i, j, x) == L.sig(i, j, y);
      if (equal) r.add_once("C5", L.name(x) + " and " + L.name(y));
    }
  return r;
}

ElementSet boolean_center(const FiniteAlgebra& L) {
  const int sz = L.size();
  ElementSet complemented = ElementSet::empty(sz);
  for (int b = 0; b < sz; ++b)
    for (int c = 0; c < sz; ++c)
      if (L.mt(b, c) == L.bottom && L.jn(b, c) == L.top) {
        complemented.insert(b);
        break;
      }
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j) {
      ElementSet image = ElementSet::empty(sz);
      for (int x = 0; x < sz; ++x) image.insert(L.sig(i, j, x));
      if (!(image == complemented))
        throw InternalCheckError(
            "boolean center differs from the image of sigma_" +
            std::to_string(i) + std::to_string(j));
    }
  return complemented;
}

int delta(const FiniteAlgebra& L, int a, int b) {
  int acc = L.top;
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j) {
      int sa = L.sig(i, j, a);
      int sb = L.sig(i, j, b);
      int term = L.mt(L.jn(L.ng(sa), sb), L.jn(L.ng(sb), sa));
      acc = L.mt(acc, term);
    }
  return acc;
}

int implication(const FiniteAlgebra& L, int x, int y) {
  return L.jn(L.sig(L.n - 1, L.m - 1, L.ng(x)), y);
}

ElementSet filter_generated(const FiniteAlgebra& L, const ElementSet& gens) {
  int base = L.top;
  for (int g : gens.elements()) base = L.mt(base, g);
  return principal_filter(L, base);
}

ElementSet principal_filter(const FiniteAlgebra& L, int a) {
  ElementSet s = ElementSet::empty(L.size());
  for (int x = 0; x < L.size(); ++x)
    if (L.le(a, x)) s.insert(x);
  return s;
}

ElementSet deductive_closure(const FiniteAlgebra& L, const ElementSet& gens) {
  ElementSet d = gens;
  d.insert(L.top);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x : d.elements())
      for (int y = 0; y < L.size(); ++y) {
        if (d.contains(y)) continue;
        if (d.contains(implication(L, x, y))) {
          d.insert(y);
          changed = true;
        }
      }
  }
  return d;
}

std::vector<ElementSet> deductive_systems(const FiniteAlgebra& L,
                                          const Caps& caps) {
  const int sz = L.size();
  if (sz > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "carrier size " + std::to_string(sz) +
                          " exceeds cap-carrier=" + std::to_string(caps.carrier));
  std::vector<ElementSet> out;
  const uint64_t limit = uint64_t{1} << sz;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    if (!((mask >> L.top) & 1u)) continue;
    ElementSet d = ElementSet::from_mask(sz, mask);
    bool closed = true;
    for (int x : d.elements()) {
      for (int y = 0; y < sz && closed; ++y)
        if (!d.contains(y) && d.contains(implication(L, x, y))) closed = false;
      if (!closed) break;
    }
    if (closed) out.push_back(d);
  }
  return out;
}

std::vector<ElementSet> stone_filters(const FiniteAlgebra& L,
                                      const Caps& caps) {
  const int sz = L.size();
  if (sz > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "carrier size " + std::to_string(sz) +
                          " exceeds cap-carrier=" + std::to_string(caps.carrier));
  // Every filter of a finite lattice is principal.
  std::vector<ElementSet> out;
  for (int a = 0; a < sz; ++a) {
    ElementSet f = principal_filter(L, a);
    bool stone = true;
    for (int x : f.elements())
      if (!f.contains(L.sig(1, 1, x))) {
        stone = false;
        break;
      }
    if (stone) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  // Independent route: deductive systems via -> (subset scan at small sizes).
  if (sz <= 16) {
    std::vector<ElementSet> ds = deductive_systems(L, caps);
    std::sort(ds.begin(), ds.end());
    if (!(ds == out))
      throw InternalCheckError(
          "Stone filters and deductive systems disagree");
  }
  return out;
}

std::optional<std::vector<int>> is_centred(const FiniteAlgebra& L) {
  std::vector<int> family;
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j) {
      std::vector<int> candidates;
      for (int x = 0; x < L.size(); ++x) {
        bool fits = true;
        for (int rr = 1; rr < L.n && fits; ++rr)
          for (int ss = 1; ss < L.m && fits; ++ss) {
            int want = (i <= rr && j <= ss) ? L.top : L.bottom;
            fits = L.sig(rr, ss, x) == want;
          }
        if (fits) candidates.push_back(x);
      }
      if (candidates.empty()) return std::nullopt;
      int least = candidates[0];
      for (int c : candidates) least = L.mt(least, c);
      if (std::find(candidates.begin(), candidates.end(), least) ==
          candidates.end())
        throw InternalCheckError("centering candidates have no least element");
      family.push_back(least);
    }
  return family;
}

std::optional<int> relative_pseudocomplement(const FiniteAlgebra& L, int x,
                                             int y) {
  int z = L.bottom;
  for (int t = 0; t < L.size(); ++t)
    if (L.le(L.mt(x, t), y)) z = L.jn(z, t);
  if (L.le(L.mt(x, z), y)) return z;
  return std::nullopt;
}

Subalgebra induced_subalgebra(const FiniteAlgebra& L, const ElementSet& members,
                              bool keep_exists) {
  std::vector<int> to_parent = members.elements();
  const int sz = static_cast<int>(to_parent.size());
  std::vector<int> from_parent(L.size(), -1);
  for (int k = 0; k < sz; ++k) from_parent[to_parent[k]] = k;

  auto sub_of = [&](int parent, const char* op) {
    int k = from_parent[parent];
    if (k < 0)
      throw InternalCheckError(std::string("subset not closed under ") + op);
    return k;
  };

  FiniteAlgebra S;
  S.n = L.n;
  S.m = L.m;
  S.carrier.names.reserve(sz);
  for (int p : to_parent) S.carrier.names.push_back(L.name(p));
  S.leq.leq.assign(sz, std::vector<bool>(sz, false));
  S.meet.table.assign(sz, std::vector<int>(sz, 0));
  S.join.table.assign(sz, std::vector<int>(sz, 0));
  S.neg.map.assign(sz, 0);
  for (int a = 0; a < sz; ++a) {
    S.neg.map[a] = sub_of(L.ng(to_parent[a]), "neg");
    for (int b = 0; b < sz; ++b) {
      S.leq.leq[a][b] = L.le(to_parent[a], to_parent[b]);
      S.meet.table[a][b] = sub_of(L.mt(to_parent[a], to_parent[b]), "meet");
      S.join.table[a][b] = sub_of(L.jn(to_parent[a], to_parent[b]), "join");
    }
  }
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j) {
      OpTable1 t;
      t.map.assign(sz, 0);
      for (int a = 0; a < sz; ++a)
        t.map[a] = sub_of(L.sig(i, j, to_parent[a]), "sigma");
      S.sigma.push_back(std::move(t));
    }
  if (keep_exists) {
    if (!L.has_exists())
      throw StructuralError("subalgebra requested exists but parent has none");
    OpTable1 t;
    t.map.assign(sz, 0);
    for (int a = 0; a < sz; ++a)
      t.map[a] = sub_of(L.ex(to_parent[a]), "exists");
    S.exists = std::move(t);
  }
  S.bottom = sub_of(L.bottom, "bottom");
  S.top = sub_of(L.top, "top");
  return Subalgebra{share(std::move(S)), to_parent, from_parent};
}

Subalgebra boolean_subalgebra(const FiniteAlgebra& L, const ElementSet& members,
                              bool keep_exists) {
  Subalgebra sub = induced_subalgebra(L, members, keep_exists);
  FiniteAlgebra B = *sub.algebra;
  for (int k = 0; k < B.size(); ++k) {
    int p = sub.to_parent[k];
    bool complemented = false;
    for (int c = 0; c < L.size(); ++c)
      if (L.mt(p, c) == L.bottom && L.jn(p, c) == L.top) complemented = true;
    if (!complemented)
      throw RejectedInput("boolean_subalgebra: " + L.name(p) +
                          " is not complemented");
  }
  B.n = 2;
  B.m = 2;
  B.sigma = {identity_table(B.size())};
  sub.algebra = share(std::move(B));
  return sub;
}

}  // namespace mlmw
