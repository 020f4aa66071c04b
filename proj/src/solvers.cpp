#include "regind/solvers.hpp"

#include "bits.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace regind {

namespace {

using detail::Bits;

std::vector<std::vector<Vertex>> components(const Graph &g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0)
      continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex u : g.neighbors(members[i]))
        if (comp[u] < 0) {
          comp[u] = comp[s];
          members.push_back(u);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

template <int W> class AlphaSearch {
public:
  AlphaSearch(const Graph &g, const std::vector<Vertex> &order, int k)
      : n_(static_cast<int>(order.size())), k_(k), adj_(order.size()),
        deg_(order.size(), 0) {
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < n_; ++i)
      local[order[i]] = i;
    for (int i = 0; i < n_; ++i)
      for (Vertex u : g.neighbors(order[i]))
        adj_[i].set(local[u]);
  }

  Bits<W> run() {
    Bits<W> all;
    for (int i = 0; i < n_; ++i)
      all.set(i);
    Bits<W> none;
    expand(none, all, 0);
    return best_set_;
  }

private:
  int cover_bound(Bits<W> rest) const {
    int bound = 0;
    while (rest.any()) {
      int v = rest.first();
      rest.reset(v);
      Bits<W> cand = rest & adj_[v];
      int size = 1;
      while (cand.any()) {
        int u = cand.first();
        rest.reset(u);
        cand &= adj_[u];
        ++size;
      }
      bound += std::min(size, k_ + 1);
    }
    return bound;
  }

  // deg_[x] counts neighbors of x in `chosen`. Every candidate can be added
  // without breaking the defect budget of itself or any chosen vertex.
  void expand(const Bits<W> &chosen, Bits<W> cand, int size) {
    if (size > best_) {
      best_ = size;
      best_set_ = chosen;
    }
    if (!cand.any() || size + cover_bound(cand) <= best_)
      return;
    const int v = cand.first();
    cand.reset(v);

    Bits<W> next_chosen = chosen;
    next_chosen.set(v);
    Bits<W> next_cand = cand;
    adj_[v].for_each([&](int w) {
      ++deg_[w];
      if (chosen.test(w)) {
        if (deg_[w] == k_)
          next_cand.remove(adj_[w]);
      } else if (deg_[w] > k_) {
        next_cand.reset(w);
      }
    });
    if (deg_[v] == k_)
      next_cand.remove(adj_[v]);
    expand(next_chosen, next_cand, size + 1);
    adj_[v].for_each([&](int w) { --deg_[w]; });

    expand(chosen, cand, size);
  }

  int n_;
  int k_;
  std::vector<Bits<W>> adj_;
  std::vector<int> deg_;
  int best_ = -1;
  Bits<W> best_set_;
};

template <int W>
std::vector<Vertex> solve_component(const Graph &g, std::vector<Vertex> order,
                                    int k) {
  AlphaSearch<W> search(g, order, k);
  std::vector<Vertex> out;
  search.run().for_each([&](int i) { out.push_back(order[i]); });
  return out;
}

std::vector<Vertex> alpha_component(const Graph &g,
                                    const std::vector<Vertex> &members, int k) {
  std::vector<Vertex> order = members;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  const std::size_t n = order.size();
  if (n <= 64)
    return solve_component<1>(g, order, k);
  if (n <= 128)
    return solve_component<2>(g, order, k);
  if (n <= 256)
    return solve_component<4>(g, order, k);
  if (n <= 1024)
    return solve_component<16>(g, order, k);
  throw std::length_error("alpha_k_exact: component with " +
                          std::to_string(n) + " vertices exceeds 1024");
}

class DefectiveColoring {
public:
  DefectiveColoring(const Graph &g, int k)
      : g_(g), k_(k), color_(g.order(), -1), same_(g.order(), 0),
        order_(g.order()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
  }

  bool feasible(int colors) {
    colors_ = colors;
    std::fill(color_.begin(), color_.end(), -1);
    std::fill(same_.begin(), same_.end(), 0);
    return assign(0, 0);
  }

  const std::vector<int> &coloring() const { return color_; }

private:
  bool assign(std::size_t idx, int used) {
    if (idx == order_.size())
      return true;
    const Vertex v = order_[idx];
    const int limit = std::min(colors_, used + 1);
    std::vector<Vertex> mates;
    for (int c = 0; c < limit; ++c) {
      mates.clear();
      bool ok = true;
      for (Vertex u : g_.neighbors(v))
        if (color_[u] == c) {
          if (same_[u] + 1 > k_) {
            ok = false;
            break;
          }
          mates.push_back(u);
        }
      if (!ok || static_cast<int>(mates.size()) > k_)
        continue;
      color_[v] = c;
      same_[v] = static_cast<int>(mates.size());
      for (Vertex u : mates)
        ++same_[u];
      if (assign(idx + 1, std::max(used, c + 1)))
        return true;
      for (Vertex u : mates)
        --same_[u];
      same_[v] = 0;
      color_[v] = -1;
    }
    return false;
  }

  const Graph &g_;
  int k_;
  int colors_ = 0;
  std::vector<int> color_;
  std::vector<int> same_;
  std::vector<Vertex> order_;
};

} // namespace

AlphaResult alpha_k_exact(const Graph &g, int k) {
  if (k < 0)
    throw std::invalid_argument("alpha_k_exact: k must be non-negative");
  AlphaResult out;
  out.witness.k = k;
  for (const auto &members : components(g)) {
    auto part = alpha_component(g, members, k);
    out.witness.vertices.insert(out.witness.vertices.end(), part.begin(),
                                part.end());
  }
  std::sort(out.witness.vertices.begin(), out.witness.vertices.end());
  out.size = static_cast<int>(out.witness.vertices.size());
  return out;
}

AlphaResult alpha_k_brute_force(const Graph &g, int k) {
  const int n = g.order();
  if (n > 24)
    throw std::length_error("alpha_k_brute_force: n > 24");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::uint32_t best = 0;
  int best_size = 0;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (std::uint32_t s = 1; s < limit && s != 0; ++s) {
    int size = std::popcount(s);
    if (size <= best_size)
      continue;
    bool ok = true;
    for (std::uint32_t rest = s; rest && ok; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      ok = std::popcount(adj[v] & s) <= k;
    }
    if (ok) {
      best = s;
      best_size = size;
    }
  }
  AlphaResult out;
  out.size = best_size;
  out.witness.k = k;
  for (int v = 0; v < n; ++v)
    if ((best >> v) & 1)
      out.witness.vertices.push_back(v);
  return out;
}

Partition chi_k_partition(const Graph &g, int k) {
  if (k < 0)
    throw std::invalid_argument("chi_k: k must be non-negative");
  Partition p;
  p.k = k;
  if (g.order() == 0)
    return p;
  DefectiveColoring search(g, k);
  int colors = 1;
  while (!search.feasible(colors))
    ++colors;
  p.classes.resize(colors);
  for (Vertex v = 0; v < g.order(); ++v)
    p.classes[search.coloring()[v]].push_back(v);
  return p;
}

int chi_k_exact(const Graph &g, int k) {
  return static_cast<int>(chi_k_partition(g, k).classes.size());
}

int chi_exact(const Graph &g) { return chi_k_exact(g, 0); }

int lovasz_class_count(const Graph &g, int k) {
  return (g.max_degree() + 1 + k) / (k + 1);
}

Partition lovasz_partition(const Graph &g, int k) {
  if (k < 0)
    throw std::invalid_argument("lovasz_partition: k must be non-negative");
  const int n = g.order();
  const int t = lovasz_class_count(g, k);
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v)
    color[v] = v % t;

  Partition p;
  p.k = k;
  std::vector<int> count(t);
  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v = 0; v < n; ++v) {
      std::fill(count.begin(), count.end(), 0);
      for (Vertex u : g.neighbors(v))
        ++count[color[u]];
      if (count[color[v]] <= k)
        continue;
      int target = static_cast<int>(
          std::min_element(count.begin(), count.end()) - count.begin());
      color[v] = target;
      ++p.moves;
      moved = true;
    }
  }
  p.classes.resize(t);
  for (Vertex v = 0; v < n; ++v)
    p.classes[color[v]].push_back(v);
  return p;
}

bool is_defective_coloring(const Graph &g, const Partition &p) {
  std::vector<int> hits(g.order(), 0);
  for (const auto &cls : p.classes) {
    for (Vertex v : cls) {
      if (v < 0 || v >= g.order())
        return false;
      ++hits[v];
    }
    if (induced_max_degree(g, cls) > p.k)
      return false;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::optional<FairDomination> fd_exact(const Graph &g) {
  const int n = g.order();
  if (n == 0 || g.min_degree() == 0)
    return std::nullopt;
  if (n > 24)
    throw std::length_error("fd_exact: n > 24");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  auto fair = [&](std::uint32_t s) {
    int want = -1;
    for (std::uint32_t rest = full & ~s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int c = std::popcount(adj[v] & s);
      if (c == 0 || (want >= 0 && c != want))
        return false;
      want = c;
    }
    return true;
  };
  for (int size = 1; size <= n; ++size) {
    // Gosper's hack visits size-subsets in increasing numeric order.
    std::uint32_t s = (1u << size) - 1;
    while (s <= full) {
      if (fair(s)) {
        FairDomination out{size, {}};
        for (int v = 0; v < n; ++v)
          if ((s >> v) & 1)
            out.set.push_back(v);
        return out;
      }
      std::uint32_t c = s & -s;
      std::uint32_t r = s + c;
      if (r == 0)
        break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

} // namespace regind
