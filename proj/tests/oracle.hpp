#pragma once

// Exhaustive reference computations used by the tests. Everything here works
// on adjacency bitmasks and shares no code with the library solvers.

#include "regind/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const regind::Graph &g) {
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline bool k_independent(const std::vector<Mask> &adj, Mask s, int k) {
  for (Mask rest = s; rest; rest &= rest - 1)
    if (std::popcount(adj[std::countr_zero(rest)] & s) > k)
      return false;
  return true;
}

/// Largest k-independent subset of `pool`.
inline int alpha_k(const regind::Graph &g, int k, Mask pool) {
  const auto adj = adjacency(g);
  int best = 0;
  // Enumerate the submasks of pool.
  for (Mask s = pool;; s = (s - 1) & pool) {
    const int size = std::popcount(s);
    if (size > best && k_independent(adj, s, k))
      best = size;
    if (s == 0)
      break;
  }
  return best;
}

inline Mask all(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int alpha_k(const regind::Graph &g, int k) { return alpha_k(g, k, all(g.order())); }

/// Straight from the definition: the largest k-independent set whose members
/// share one degree.
inline int alpha_k_reg(const regind::Graph &g, int k) {
  int best = 0;
  for (int j = 0; j < g.order(); ++j) {
    Mask pool = 0;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) == j)
        pool |= Mask{1} << v;
    if (pool)
      best = std::max(best, alpha_k(g, k, pool));
  }
  return best;
}

/// Smallest c admitting a c-coloring whose classes are k-independent, by
/// trying every assignment in [0, c)^n.
inline int chi_k(const regind::Graph &g, int k) {
  const int n = g.order();
  if (n == 0)
    return 0;
  const auto adj = adjacency(g);
  for (int c = 1;; ++c) {
    std::vector<int> color(n, 0);
    for (;;) {
      std::vector<Mask> cls(c, 0);
      for (int v = 0; v < n; ++v)
        cls[color[v]] |= Mask{1} << v;
      if (std::all_of(cls.begin(), cls.end(),
                      [&](Mask m) { return k_independent(adj, m, k); }))
        return c;
      int i = 0;
      while (i < n && ++color[i] == c)
        color[i++] = 0;
      if (i == n)
        break;
    }
  }
}

/// Minimum fair dominating set size, -1 when the graph has an isolated vertex.
inline int fd(const regind::Graph &g) {
  const int n = g.order();
  if (n == 0 || g.min_degree() == 0)
    return -1;
  const auto adj = adjacency(g);
  int best = n;
  for (Mask s = 1; s <= all(n); ++s) {
    int common = -1;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if ((s >> v) & 1)
        continue;
      const int c = std::popcount(adj[v] & s);
      if (c == 0 || (common != -1 && c != common))
        ok = false;
      common = c;
    }
    if (ok)
      best = std::min(best, std::popcount(s));
  }
  return best;
}

/// Every graph on n labelled vertices, as an edge-subset mask over the pairs
/// (u, v), u < v, in lexicographic order.
inline void for_each_labelled_graph(int n, const std::function<void(const regind::Graph &)> &fn) {
  std::vector<regind::Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      slots.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<regind::Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1)
        edges.push_back(slots[i]);
    fn(regind::Graph(n, edges));
  }
}

} // namespace oracle
