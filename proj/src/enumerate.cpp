#include "regind/generators.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace regind {

Graph pruefer_decode(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    if (x < 0 || x >= n)
      throw std::invalid_argument("pruefer_decode: label out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1)
      ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1)
      last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return Graph(n, edges);
}

namespace {

std::vector<Vertex> tree_centers(const Graph &t) {
  const int n = t.order();
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1)
      layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex u : t.neighbors(v))
        if (--deg[u] == 1)
          next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string encode(const Graph &t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex u : t.neighbors(v))
    if (u != parent)
      kids.push_back(encode(t, u, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto &s : kids)
    out += s;
  return out + ")";
}

Graph decode_canonical(const std::string &code) {
  std::vector<Edge> edges;
  std::vector<int> stack;
  int n = 0;
  for (char c : code) {
    if (c == '(') {
      if (!stack.empty())
        edges.emplace_back(stack.back(), n);
      stack.push_back(n++);
    } else {
      stack.pop_back();
    }
  }
  return Graph(n, edges);
}

} // namespace

std::string tree_canonical_form(const Graph &tree) {
  if (!is_tree(tree))
    throw std::invalid_argument("tree_canonical_form: not a tree");
  std::string best;
  for (Vertex c : tree_centers(tree)) {
    std::string code = encode(tree, c, -1);
    if (best.empty() || code < best)
      best = std::move(code);
  }
  return best;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("enumerate_trees: n must be in 1..12");
  std::set<std::string> level{"()"};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> next;
    for (const auto &code : level) {
      Graph t = decode_canonical(code);
      std::vector<Edge> edges = t.edges();
      for (Vertex v = 0; v < t.order(); ++v) {
        edges.emplace_back(v, t.order());
        next.insert(tree_canonical_form(Graph(t.order() + 1, edges)));
        edges.pop_back();
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto &code : level)
    out.push_back(decode_canonical(code));
  return out;
}

std::vector<Graph> enumerate_trees_pruefer(int n) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("enumerate_trees_pruefer: n must be in 1..9");
  if (n <= 2)
    return {n == 1 ? Graph(1, {}) : path_graph(2)};
  std::set<std::string> codes;
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    codes.insert(tree_canonical_form(pruefer_decode(seq)));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n)
      seq[i++] = 0;
    if (i == n - 2)
      break;
  }
  std::vector<Graph> out;
  for (const auto &code : codes)
    out.push_back(decode_canonical(code));
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("enumerate_connected_graphs: n in 1..6");
  std::vector<Edge> slots;
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      slot_of[u][v] = slot_of[v][u] = static_cast<int>(slots.size());
      slots.emplace_back(u, v);
    }
  const int e = static_cast<int>(slots.size());

  // For every vertex permutation, where each edge slot lands.
  std::vector<std::vector<int>> remap;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> m(e);
    for (int s = 0; s < e; ++s)
      m[s] = slot_of[perm[slots[s].first]][perm[slots[s].second]];
    remap.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto connected = [&](std::uint32_t mask) {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t grow = 0;
      for (int s = 0; s < e; ++s)
        if ((mask >> s) & 1) {
          auto [u, v] = slots[s];
          if ((frontier >> u) & 1)
            grow |= 1u << v;
          if ((frontier >> v) & 1)
            grow |= 1u << u;
        }
      frontier = grow & ~seen;
      seen |= grow;
    }
    return seen == (1u << n) - 1;
  };

  std::set<std::uint32_t> canon;
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (!connected(mask))
      continue;
    std::uint32_t best = ~0u;
    for (const auto &m : remap) {
      std::uint32_t image = 0;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1)
        image |= 1u << m[std::countr_zero(rest)];
      best = std::min(best, image);
    }
    canon.insert(best);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask : canon) {
    std::vector<Edge> edges;
    for (int s = 0; s < e; ++s)
      if ((mask >> s) & 1)
        edges.push_back(slots[s]);
    out.emplace_back(n, edges);
  }
  return out;
}

} // namespace regind
