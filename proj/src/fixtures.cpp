#include "mlmw/fixtures.hpp"

#include "mlmw/representation.hpp"

namespace mlmw {

FiniteAlgebra two_element_boolean() { return two_element_lm(2, 2); }

FiniteAlgebra two_element_lm(int n, int m) {
  FiniteAlgebra L;
  L.carrier.names = {"0", "1"};
  L.n = n;
  L.m = m;
  L.leq.leq = {{true, true}, {false, true}};
  L.meet.table = {{0, 0}, {0, 1}};
  L.join.table = {{0, 1}, {1, 1}};
  L.neg.map = {1, 0};
  for (int k = 0; k < (n - 1) * (m - 1); ++k) L.sigma.push_back(identity_table(2));
  L.exists = identity_table(2);
  L.bottom = 0;
  L.top = 1;
  return L;
}

FiniteAlgebra product(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  if (A.n != B.n || A.m != B.m)
    throw StructuralError("product factors must share (n,m)");
  FiniteAlgebra P;
  P.n = A.n;
  P.m = A.m;
  const int sa = A.size(), sb = B.size(), sz = sa * sb;
  auto pack = [&](int a, int b) { return a * sb + b; };
  P.carrier.names.reserve(sz);
  for (int a = 0; a < sa; ++a)
    for (int b = 0; b < sb; ++b)
      P.carrier.names.push_back("(" + A.name(a) + "," + B.name(b) + ")");
  P.leq.leq.assign(sz, std::vector<bool>(sz, false));
  P.meet.table.assign(sz, std::vector<int>(sz, 0));
  P.join.table.assign(sz, std::vector<int>(sz, 0));
  P.neg.map.assign(sz, 0);
  for (int a = 0; a < sa; ++a)
    for (int b = 0; b < sb; ++b) {
      int x = pack(a, b);
      P.neg.map[x] = pack(A.ng(a), B.ng(b));
      for (int c = 0; c < sa; ++c)
        for (int d = 0; d < sb; ++d) {
          int y = pack(c, d);
          P.leq.leq[x][y] = A.le(a, c) && B.le(b, d);
          P.meet.table[x][y] = pack(A.mt(a, c), B.mt(b, d));
          P.join.table[x][y] = pack(A.jn(a, c), B.jn(b, d));
        }
    }
  for (int i = 1; i < P.n; ++i)
    for (int j = 1; j < P.m; ++j) {
      OpTable1 t;
      t.map.assign(sz, 0);
      for (int a = 0; a < sa; ++a)
        for (int b = 0; b < sb; ++b)
          t.map[pack(a, b)] = pack(A.sig(i, j, a), B.sig(i, j, b));
      P.sigma.push_back(std::move(t));
    }
  if (A.has_exists() && B.has_exists()) {
    OpTable1 t;
    t.map.assign(sz, 0);
    for (int a = 0; a < sa; ++a)
      for (int b = 0; b < sb; ++b)
        t.map[pack(a, b)] = pack(A.ex(a), B.ex(b));
    P.exists = std::move(t);
  }
  P.bottom = pack(A.bottom, B.bottom);
  P.top = pack(A.top, B.top);
  return P;
}

FiniteAlgebra with_quantifier(FiniteAlgebra L, OpTable1 q) {
  if (q.size() != L.size())
    throw StructuralError("quantifier table has wrong length");
  L.exists = std::move(q);
  return L;
}

FiniteAlgebra with_identity_quantifier(FiniteAlgebra L) {
  L.exists = identity_table(L.size());
  return L;
}

namespace {

FiniteAlgebra renamed(FiniteAlgebra L, std::vector<std::string> names) {
  L.carrier.names = std::move(names);
  return L;
}

FiniteAlgebra make_chain3() {
  FiniteAlgebra L = grid_power(two_element_boolean(), 3, 2);
  return renamed(std::move(L), {"0", "c", "1"});
}

FiniteAlgebra make_six() {
  FiniteAlgebra L = grid_power(two_element_boolean(), 3, 3);
  std::vector<std::string> names;
  // bitstring of the grid in row-major order
  for (const std::string& nm : L.carrier.names) {
    std::string bits;
    for (char ch : nm)
      if (ch == '0' || ch == '1') bits += ch;
    names.push_back(bits);
  }
  return renamed(std::move(L), std::move(names));
}

FiniteAlgebra make_prod() {
  FiniteAlgebra c3 = make_chain3();
  FiniteAlgebra P = product(c3, c3);
  OpTable1 diag;
  diag.map.assign(9, 0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      int j = c3.jn(a, b);
      diag.map[a * 3 + b] = j * 3 + j;
    }
  P.exists = std::move(diag);
  return P;
}

}  // namespace

FiniteAlgebra fixture(const std::string& name) {
  if (name == "TRIV2")
    return renamed(grid_power(two_element_boolean(), 2, 2), {"0", "1"});
  if (name == "CHAIN3") return make_chain3();
  if (name == "SIX") return make_six();
  if (name == "PROD") return make_prod();
  throw StructuralError("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"TRIV2", "CHAIN3", "SIX", "PROD"};
}

}  // namespace mlmw
