#include "mlmw/quantifier.hpp"

#include <algorithm>

#include "mlmw/lm.hpp"

namespace mlmw {

Report check_quantifier(const FiniteAlgebra& L, const OpTable1& q) {
  Report r;
  if (q.size() != L.size()) {
    r.add("shape", "quantifier table has wrong length");
    return r;
  }
  const int sz = L.size();
  if (q(L.bottom) != L.bottom) r.add("e1", "q(0)=" + L.name(q(L.bottom)));
  for (int x = 0; x < sz; ++x)
    if (L.mt(x, q(x)) != x) {
      r.add_once("e2", L.name(x));
      break;
    }
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      if (q(L.mt(x, q(y))) != L.mt(q(x), q(y)))
        r.add_once("e3", L.name(x) + "," + L.name(y));
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j)
      for (int x = 0; x < sz; ++x)
        if (q(L.sig(i, j, x)) != L.sig(i, j, q(x)))
          r.add_once("e4", "(" + std::to_string(i) + "," + std::to_string(j) +
                               ") at " + L.name(x));
  return r;
}

Report check_universal_view(const FiniteAlgebra& L, const OpTable1& q) {
  Report r;
  const int sz = L.size();
  auto fa = [&](int x) { return L.ng(q(L.ng(x))); };
  if (fa(L.top) != L.top) r.add("e5", "forall(1)=" + L.name(fa(L.top)));
  for (int x = 0; x < sz; ++x)
    if (L.mt(x, fa(x)) != fa(x)) {
      r.add_once("e6", L.name(x));
      break;
    }
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      if (fa(L.jn(x, fa(y))) != L.jn(fa(x), fa(y)))
        r.add_once("e7", L.name(x) + "," + L.name(y));
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j)
      for (int x = 0; x < sz; ++x)
        if (fa(L.sig(i, j, x)) != L.sig(i, j, fa(x)))
          r.add_once("e8", "(" + std::to_string(i) + "," + std::to_string(j) +
                               ") at " + L.name(x));
  return r;
}

Report derived_law_suite(const FiniteAlgebra& L, const OpTable1& q) {
  Report r;
  const int sz = L.size();
  auto fa = [&](int x) { return L.ng(q(L.ng(x))); };
  ElementSet range = ElementSet::empty(sz);
  for (int x = 0; x < sz; ++x) range.insert(q(x));
  ElementSet center = boolean_center(L);

  if (q(L.top) != L.top) r.add("e9", "q(1)=" + L.name(q(L.top)));
  for (int x = 0; x < sz; ++x) {
    if (q(q(x)) != q(x)) r.add_once("e10", L.name(x));
    if (range.contains(x) != (q(x) == x)) r.add_once("e11", L.name(x));
    if (fa(fa(x)) != fa(x)) r.add_once("e16", L.name(x));
    if (center.contains(x) && !center.contains(fa(x)))
      r.add_once("e18", L.name(x));
    if (q(fa(x)) != fa(x) || fa(q(x)) != q(x)) r.add_once("e21", L.name(x));
    if ((x == fa(x)) != (x == q(x))) r.add_once("e22", L.name(x));
  }
  if (fa(L.bottom) != L.bottom) r.add("e15", "forall(0)=" + L.name(fa(L.bottom)));
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      if (L.le(x, y) && !L.le(q(x), q(y))) r.add_once("e12", L.name(x) + "," + L.name(y));
      if (q(L.jn(x, y)) != L.jn(q(x), q(y)))
        r.add_once("e13", L.name(x) + "," + L.name(y));
      if (L.le(x, y) && !L.le(fa(x), fa(y)))
        r.add_once("e17", L.name(x) + "," + L.name(y));
      if (fa(L.mt(x, y)) != L.mt(fa(x), fa(y)))
        r.add_once("e19", L.name(x) + "," + L.name(y));
    }
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j)
      for (int x = 0; x < sz; ++x) {
        std::string w = "(" + std::to_string(i) + "," + std::to_string(j) +
                        ") at " + L.name(x);
        int a = L.ng(L.sig(i, j, q(x)));
        if (q(a) != a) r.add_once("e14", w);
        int b = L.ng(L.sig(i, j, fa(x)));
        if (fa(b) != b) r.add_once("e20", w);
        if (q(b) != b) r.add_once("e23", w);
        if (fa(a) != a) r.add_once("e24", w);
      }
  return r;
}

namespace {

// Meet of the members of M lying above x; M must contain top.
int least_cover(const FiniteAlgebra& L, const ElementSet& M, int x) {
  int acc = L.top;
  for (int z : M.elements())
    if (L.le(x, z)) acc = L.mt(acc, z);
  return acc;
}

}  // namespace

RangeProfile range_profile(const FiniteAlgebra& L, const OpTable1& q) {
  RangeProfile out;
  const int sz = L.size();
  out.range = ElementSet::empty(sz);
  for (int x = 0; x < sz; ++x) out.range.insert(q(x));
  Report& r = out.report;
  const ElementSet& M = out.range;

  // (i) q x is the least member of the range above x.
  for (int x = 0; x < sz; ++x) {
    int cover = least_cover(L, M, x);
    if (!M.contains(cover) || q(x) != cover) {
      r.add_once("range-i", L.name(x));
      break;
    }
  }
  // (ii) subalgebra closure.
  for (int x : M.elements()) {
    if (!M.contains(L.ng(x))) r.add_once("range-ii", "neg at " + L.name(x));
    for (int i = 1; i < L.n; ++i)
      for (int j = 1; j < L.m; ++j)
        if (!M.contains(L.sig(i, j, x)))
          r.add_once("range-ii", "sigma at " + L.name(x));
    for (int y : M.elements()) {
      if (!M.contains(L.mt(x, y)))
        r.add_once("range-ii", "meet at " + L.name(x) + "," + L.name(y));
      if (!M.contains(L.jn(x, y)))
        r.add_once("range-ii", "join at " + L.name(x) + "," + L.name(y));
    }
  }
  if (!M.contains(L.bottom) || !M.contains(L.top))
    r.add_once("range-ii", "bounds");
  // (iii) sigma-infimum exchange.
  for (int x = 0; x < sz; ++x)
    for (int i = 1; i < L.n; ++i)
      for (int j = 1; j < L.m; ++j)
        if (L.sig(i, j, least_cover(L, M, x)) !=
            least_cover(L, M, L.sig(i, j, x)))
          r.add_once("range-iii",
                     "(" + std::to_string(i) + "," + std::to_string(j) +
                         ") at " + L.name(x));
  // (iv) closure under existing relative pseudocomplements.
  for (int x : M.elements())
    for (int y : M.elements()) {
      auto rpc = relative_pseudocomplement(L, x, y);
      if (rpc && !M.contains(*rpc))
        r.add_once("range-iv", L.name(x) + "=>" + L.name(y));
    }
  return out;
}

Report check_moore_family(const FiniteAlgebra& L, const ElementSet& M) {
  Report r;
  // (i) Moore family: contains top and is closed under binary meet (on a
  // finite carrier this makes every least-upper-member meet land in M).
  if (!M.contains(L.top)) r.add("moore-i", "top missing");
  for (int x : M.elements())
    for (int y : M.elements())
      if (!M.contains(L.mt(x, y))) {
        r.add_once("moore-i", "meet at " + L.name(x) + "," + L.name(y));
      }
  // (ii) subalgebra.
  if (!M.contains(L.bottom)) r.add_once("moore-ii", "bottom missing");
  for (int x : M.elements()) {
    if (!M.contains(L.ng(x))) r.add_once("moore-ii", "neg at " + L.name(x));
    for (int i = 1; i < L.n; ++i)
      for (int j = 1; j < L.m; ++j)
        if (!M.contains(L.sig(i, j, x)))
          r.add_once("moore-ii", "sigma at " + L.name(x));
    for (int y : M.elements())
      if (!M.contains(L.jn(x, y)))
        r.add_once("moore-ii", "join at " + L.name(x) + "," + L.name(y));
  }
  if (!r.ok()) return r;  // (iii)/(iv) need the closure to be well defined
  // (iii) sigma-infimum exchange.
  for (int x = 0; x < L.size(); ++x)
    for (int i = 1; i < L.n; ++i)
      for (int j = 1; j < L.m; ++j)
        if (L.sig(i, j, least_cover(L, M, x)) !=
            least_cover(L, M, L.sig(i, j, x)))
          r.add_once("moore-iii",
                     "(" + std::to_string(i) + "," + std::to_string(j) +
                         ") at " + L.name(x));
  // (iv) relative pseudocomplements exist and stay inside.
  for (int x : M.elements())
    for (int y : M.elements()) {
      auto rpc = relative_pseudocomplement(L, x, y);
      if (!rpc)
        r.add_once("moore-iv",
                   L.name(x) + "=>" + L.name(y) + " does not exist");
      else if (!M.contains(*rpc))
        r.add_once("moore-iv", L.name(x) + "=>" + L.name(y) + " escapes");
    }
  return r;
}

OpTable1 quantifier_from_moore_family(const FiniteAlgebra& L,
                                      const ElementSet& M) {
  Report r = check_moore_family(L, M);
  if (!r.ok())
    throw RejectedInput("subset is not a qualifying Moore family: " +
                        r.items.front().law + " (" + r.items.front().detail +
                        ")");
  OpTable1 q;
  q.map.resize(L.size());
  for (int x = 0; x < L.size(); ++x) q.map[x] = least_cover(L, M, x);
  Report qr = check_quantifier(L, q);
  if (!qr.ok())
    throw InternalCheckError("induced table fails the quantifier axioms: " +
                             qr.items.front().law);
  RangeProfile prof = range_profile(L, q);
  if (!(prof.range == M))
    throw InternalCheckError("induced quantifier range differs from M");
  return q;
}

std::vector<ElementSet> moore_families(const FiniteAlgebra& L,
                                       const Caps& caps) {
  const int sz = L.size();
  if (sz > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "carrier size " + std::to_string(sz) +
                          " exceeds cap-carrier=" + std::to_string(caps.carrier));
  std::vector<ElementSet> out;
  const uint64_t limit = uint64_t{1} << sz;
  const uint64_t need = (uint64_t{1} << L.bottom) | (uint64_t{1} << L.top);
  for (uint64_t mask = 0; mask < limit; ++mask) {
    if ((mask & need) != need) continue;
    ElementSet M = ElementSet::from_mask(sz, mask);
    // cheap rejections first
    bool meet_closed = true;
    for (int x : M.elements()) {
      for (int y : M.elements())
        if (!M.contains(L.mt(x, y))) {
          meet_closed = false;
          break;
        }
      if (!meet_closed) break;
    }
    if (!meet_closed) continue;
    if (check_moore_family(L, M).ok()) out.push_back(M);
  }
  return out;
}

namespace {

// Backtracking enumeration of all unary tables satisfying e1-e4, with
// partial checks as soon as every argument of an instance is decided.
// Assignment order puts the bounds and Boolean elements first so the sigma
// commutation law prunes early.
struct QuantifierSearch {
  const FiniteAlgebra& L;
  std::vector<int> order;     // assignment order of elements
  std::vector<int> rank;      // element -> position in order
  std::vector<int> q;         // q[x] or -1
  std::vector<OpTable1> found;

  explicit QuantifierSearch(const FiniteAlgebra& alg) : L(alg) {
    const int sz = L.size();
    std::vector<bool> taken(sz, false);
    auto push = [&](int x) {
      if (!taken[x]) {
        order.push_back(x);
        taken[x] = true;
      }
    };
    push(L.bottom);
    push(L.top);
    for (int i = 1; i < L.n; ++i)
      for (int j = 1; j < L.m; ++j)
        for (int x = 0; x < sz; ++x) push(L.sig(i, j, x));
    for (int x = 0; x < sz; ++x) push(x);
    rank.assign(sz, 0);
    for (int k = 0; k < sz; ++k) rank[order[k]] = k;
    q.assign(sz, -1);
  }

  bool decided(int x, int upto) const { return rank[x] < upto; }

  bool consistent(int upto) const {
    if (decided(L.bottom, upto) && q[L.bottom] != L.bottom) return false;
    for (int k = 0; k < upto; ++k) {
      int x = order[k];
      if (L.mt(x, q[x]) != x) return false;  // e2
      for (int i = 1; i < L.n; ++i)
        for (int j = 1; j < L.m; ++j) {
          int sx = L.sig(i, j, x);
          if (decided(sx, upto) && q[sx] != L.sig(i, j, q[x])) return false;
        }
      for (int l = 0; l < upto; ++l) {
        int y = order[l];
        int t = L.mt(x, q[y]);
        if (decided(t, upto) && q[t] != L.mt(q[x], q[y])) return false;  // e3
      }
    }
    return true;
  }

  void run(int pos) {
    const int sz = L.size();
    if (pos == sz) {
      OpTable1 t;
      t.map = q;
      if (check_quantifier(L, t).ok()) found.push_back(std::move(t));
      return;
    }
    int x = order[pos];
    for (int v = 0; v < sz; ++v) {
      if (L.mt(x, v) != x) continue;  // e2: x <= q(x)
      q[x] = v;
      if (consistent(pos + 1)) run(pos + 1);
    }
    q[x] = -1;
  }
};

}  // namespace

std::vector<OpTable1> enumerate_quantifiers(const FiniteAlgebra& L,
                                            const Caps& caps) {
  const int sz = L.size();
  if (sz > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "carrier size " + std::to_string(sz) +
                          " exceeds cap-carrier=" + std::to_string(caps.carrier));
  QuantifierSearch search(L);
  search.run(0);
  std::vector<OpTable1> brute = std::move(search.found);
  std::sort(brute.begin(), brute.end());

  std::vector<OpTable1> via_moore;
  for (const ElementSet& M : moore_families(L, caps))
    via_moore.push_back(quantifier_from_moore_family(L, M));
  std::sort(via_moore.begin(), via_moore.end());

  if (!(brute == via_moore))
    throw InternalCheckError(
        "brute-force and Moore-family quantifier enumerations disagree");
  return brute;
}

std::vector<ElementSet> partial_converse_gaps(const FiniteAlgebra& L,
                                              const Caps& caps) {
  const int sz = L.size();
  if (sz > caps.carrier)
    throw CapExceeded("cap-carrier",
                      "carrier size " + std::to_string(sz) +
                          " exceeds cap-carrier=" + std::to_string(caps.carrier));
  std::vector<ElementSet> out;
  const uint64_t limit = uint64_t{1} << sz;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    ElementSet M = ElementSet::from_mask(sz, mask);
    Report r = check_moore_family(L, M);
    if (r.ok()) continue;
    bool only_iii = true;
    for (const auto& v : r.items) only_iii = only_iii && v.law == "moore-iii";
    if (only_iii) out.push_back(M);
  }
  return out;
}

}  // namespace mlmw
