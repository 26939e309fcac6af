// Shared builders for hand-made lattice tables used across test suites.

#pragma once

#include <utility>
#include <vector>

#include "mlmw/core.hpp"

namespace mlmw::testing {

struct LatticeTables {
  OpTable2 meet, join;
  PosetTable leq;
};

// chain 0 < 1 < ... < k-1
inline LatticeTables chain_tables(int k) {
  LatticeTables t;
  t.meet.table.assign(k, std::vector<int>(k, 0));
  t.join.table.assign(k, std::vector<int>(k, 0));
  t.leq.leq.assign(k, std::vector<bool>(k, false));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      t.meet.table[a][b] = std::min(a, b);
      t.join.table[a][b] = std::max(a, b);
      t.leq.leq[a][b] = a <= b;
    }
  return t;
}

// diamond M3: 0 < a,b,c < 1 with incomparable middles (not distributive)
inline LatticeTables m3_tables() {
  const int bot = 0, top = 4;
  LatticeTables t;
  t.meet.table.assign(5, std::vector<int>(5, 0));
  t.join.table.assign(5, std::vector<int>(5, 0));
  t.leq.leq.assign(5, std::vector<bool>(5, false));
  auto le = [&](int x, int y) {
    return x == y || x == bot || y == top;
  };
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      t.leq.leq[a][b] = le(a, b);
      if (le(a, b)) {
        t.meet.table[a][b] = a;
        t.join.table[a][b] = b;
      } else if (le(b, a)) {
        t.meet.table[a][b] = b;
        t.join.table[a][b] = a;
      } else {
        t.meet.table[a][b] = bot;
        t.join.table[a][b] = top;
      }
    }
  return t;
}

}  // namespace mlmw::testing
