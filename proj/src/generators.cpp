#include "regind/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace regind {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0)
    throw std::invalid_argument("SplitMix64::below: zero bound");
  const std::uint64_t limit = -bound % bound; // 2^64 mod bound
  for (;;) {
    std::uint64_t x = next();
    if (x >= limit)
      return x % bound;
  }
}

double SplitMix64::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::random_tree, "random-tree"},
    {Family::random_forest, "random-forest"},
    {Family::random_ktree, "random-ktree"},
    {Family::apollonian, "apollonian"},
    {Family::maximal_outerplanar, "maximal-outerplanar"},
    {Family::extremal_tree_ii, "extremal-tree-ii"},
    {Family::extremal_tree_iii, "extremal-tree-iii"},
    {Family::extremal_forest_i, "extremal-forest-i"},
    {Family::extremal_forest_ii, "extremal-forest-ii"},
    {Family::extremal_forest_iii, "extremal-forest-iii"},
    {Family::random_gnp, "random-gnp"},
}};

void require(bool ok, const std::string &what) {
  if (!ok)
    throw std::invalid_argument(what);
}

class Builder {
public:
  int add_vertex() { return n_++; }
  int add_vertices(int count) {
    int first = n_;
    n_ += count;
    return first;
  }
  void add_edge(int u, int v) { edges_.emplace_back(u, v); }
  void add_path(int first, int count) {
    for (int i = 0; i + 1 < count; ++i)
      add_edge(first + i, first + i + 1);
  }
  Graph build() const { return Graph(n_, edges_); }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Random tree on `count` vertices starting at `first`.
void add_random_tree(Builder &b, int first, int count, SplitMix64 &rng) {
  if (count == 2)
    b.add_edge(first, first + 1);
  if (count <= 2)
    return;
  std::vector<int> seq(count - 2);
  for (auto &x : seq)
    x = static_cast<int>(rng.below(count));
  const Graph tree = pruefer_decode(seq);
  for (auto [u, v] : tree.edges())
    b.add_edge(first + u, first + v);
}

// Tree on 2p+1 vertices with a unique degree-2 vertex (local index 1) and
// maximum degree 3: a path on three vertices, then two leaves hung off the
// newest leaf p-1 times.
void add_binary_caterpillar(Builder &b, int p) {
  int a = b.add_vertex(), mid = b.add_vertex(), end = b.add_vertex();
  b.add_edge(a, mid);
  b.add_edge(mid, end);
  for (int step = 1; step < p; ++step) {
    int x = b.add_vertex(), y = b.add_vertex();
    b.add_edge(end, x);
    b.add_edge(end, y);
    end = y;
  }
}

Generated extremal_tree_ii(int p) {
  require(p >= 1, "extremal_tree_ii requires p >= 1");
  Builder b;
  const int t1 = 0;
  add_binary_caterpillar(b, p);
  const int path = b.add_vertices(3 * p + 3);
  b.add_path(path, 3 * p + 3);
  const int t2 = b.add_vertices(0);
  add_binary_caterpillar(b, p);
  b.add_edge(t1 + 1, path);
  b.add_edge(path + 3 * p + 2, t2 + 1);
  Generated out{b.build(), {}};
  const std::int64_t n = 7 * p + 5;
  out.provenance.expected.push_back({"alpha_k_reg", 1, Rational(2 * (n + 2), 7)});
  out.provenance.degree_counts = {{1, 2 * p + 2}, {2, 3 * p + 3}, {3, 2 * p}};
  return out;
}

Generated extremal_tree_iii(int p) {
  require(p >= 0, "extremal_tree_iii requires p >= 0");
  Builder b;
  const int r = 2 * p + 4;
  b.add_vertices(r);
  b.add_path(0, r);
  for (int i = 0; i < p; ++i)
    b.add_edge(2 * i + 1, b.add_vertex()); // path labels 2, 4, ..., 2p
  Generated out{b.build(), {}};
  const std::int64_t n = 3 * p + 4;
  for (int k : {2, 3})
    out.provenance.expected.push_back({"alpha_k_reg", k, Rational(n + 2, 3)});
  out.provenance.degree_counts = {{1, p + 2}, {2, p + 2}};
  if (p > 0)
    out.provenance.degree_counts[3] = p;
  return out;
}

Generated extremal_forest_i(int p) {
  require(p >= 2, "extremal_forest_i requires p >= 2");
  Builder b;
  // Caterpillar with all degrees in {1, 3}: spine of p-1 vertices.
  const int spine = b.add_vertices(p - 1);
  b.add_path(spine, p - 1);
  std::vector<int> pendant_at;
  if (p == 2) {
    pendant_at = {spine, spine, spine};
  } else {
    pendant_at = {spine, spine};
    for (int i = 1; i < p - 2; ++i)
      pendant_at.push_back(spine + i);
    pendant_at.push_back(spine + p - 2);
    pendant_at.push_back(spine + p - 2);
  }
  // Each pendant edge subdivided twice: s - x - y - leaf.
  for (int s : pendant_at) {
    int x = b.add_vertex(), y = b.add_vertex(), leaf = b.add_vertex();
    b.add_edge(s, x);
    b.add_edge(x, y);
    b.add_edge(y, leaf);
  }
  b.add_vertices(p + 1);
  Generated out{b.build(), {}};
  const std::int64_t n = 5 * p + 3;
  out.provenance.expected.push_back({"alpha_k_reg", 0, Rational(n + 2, 5)});
  out.provenance.degree_counts = {
      {0, p + 1}, {1, p + 1}, {2, 2 * p + 2}, {3, p - 1}};
  return out;
}

Generated extremal_forest_ii(int p) {
  require(p >= 1, "extremal_forest_ii requires p >= 1");
  Builder b;
  // Double star on six vertices, then two leaves on each of two leaves per
  // increment of p, oldest leaves first.
  int c1 = b.add_vertex(), c2 = b.add_vertex();
  b.add_edge(c1, c2);
  std::vector<int> leaves;
  for (int c : {c1, c1, c2, c2}) {
    int l = b.add_vertex();
    b.add_edge(c, l);
    leaves.push_back(l);
  }
  std::size_t next = 0;
  for (int step = 1; step < p; ++step) {
    for (int rep = 0; rep < 2; ++rep) {
      int host = leaves[next++];
      for (int j = 0; j < 2; ++j) {
        int l = b.add_vertex();
        b.add_edge(host, l);
        leaves.push_back(l);
      }
    }
  }
  const int path = b.add_vertices(3 * p + 3);
  b.add_path(path, 3 * p + 3);
  b.add_edge(leaves.back(), path);
  b.add_vertices(2 * p + 2);
  Generated out{b.build(), {}};
  const std::int64_t n = 9 * p + 7;
  out.provenance.expected.push_back(
      {"alpha_k_reg", 1, Rational(2 * (n + 2), 9)});
  out.provenance.degree_counts = {
      {0, 2 * p + 2}, {1, 2 * p + 2}, {2, 3 * p + 3}, {3, 2 * p}};
  return out;
}

Generated extremal_forest_iii(int q) {
  require(q >= 1, "extremal_forest_iii requires q >= 1");
  Builder b;
  const int path = b.add_vertices(q);
  b.add_path(path, q);
  for (int i = 0; i < q; ++i) {
    int mid = b.add_vertex(), end = b.add_vertex();
    b.add_edge(path + i, mid);
    b.add_edge(mid, end);
  }
  b.add_edge(path, b.add_vertex());
  b.add_vertices(q + 1);
  Generated out{b.build(), {}};
  const std::int64_t n = 4 * q + 2;
  for (int k : {2, 3})
    out.provenance.expected.push_back({"alpha_k_reg", k, Rational(n + 2, 4)});
  out.provenance.degree_counts = {{0, q + 1}, {1, q + 1}, {2, q + 1}};
  if (q > 1)
    out.provenance.degree_counts[3] = q - 1;
  return out;
}

Generated random_tree(int n, SplitMix64 &rng) {
  require(n >= 1, "random_tree requires n >= 1");
  Builder b;
  b.add_vertices(n);
  add_random_tree(b, 0, n, rng);
  return {b.build(), {}};
}

Generated random_forest(const GenSpec &spec, SplitMix64 &rng) {
  const int rest =
      spec.n - spec.isolated_vertices - 2 * spec.isolated_edges;
  require(spec.n >= 0 && spec.isolated_vertices >= 0 &&
              spec.isolated_edges >= 0 && rest >= 0,
          "random_forest: isolated parts exceed n");
  Builder b;
  // Random composition of the remaining vertices: each gap is a cut with
  // probability 1/4.
  int start = 0;
  for (int i = 1; i <= rest; ++i) {
    if (i == rest || rng.below(4) == 0) {
      b.add_vertices(i - start);
      add_random_tree(b, start, i - start, rng);
      start = i;
    }
  }
  for (int e = 0; e < spec.isolated_edges; ++e) {
    int u = b.add_vertex(), v = b.add_vertex();
    b.add_edge(u, v);
  }
  b.add_vertices(spec.isolated_vertices);
  return {b.build(), {}};
}

Generated random_ktree(int k, int n, SplitMix64 &rng) {
  require(k >= 1 && n >= k + 1, "random_ktree requires k >= 1, n >= k + 1");
  Builder b;
  b.add_vertices(k + 1);
  std::vector<std::vector<int>> cliques(1);
  for (int i = 0; i <= k; ++i) {
    cliques[0].push_back(i);
    for (int j = i + 1; j <= k; ++j)
      b.add_edge(i, j);
  }
  for (int v = k + 1; v < n; ++v) {
    std::vector<int> base = cliques[rng.below(cliques.size())];
    base.erase(base.begin() + static_cast<long>(rng.below(k + 1)));
    b.add_vertex();
    for (int u : base)
      b.add_edge(u, v);
    base.push_back(v);
    cliques.push_back(std::move(base));
  }
  return {b.build(), {}};
}

Generated apollonian(int n, SplitMix64 &rng) {
  require(n >= 4, "apollonian requires n >= 4");
  Builder b;
  b.add_vertices(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      b.add_edge(i, j);
  std::vector<std::array<int, 3>> faces{
      {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int v = 4; v < n; ++v) {
    const auto f = rng.below(faces.size());
    auto [x, y, z] = faces[f];
    b.add_vertex();
    b.add_edge(x, v);
    b.add_edge(y, v);
    b.add_edge(z, v);
    faces[f] = {x, y, v};
    faces.push_back({x, z, v});
    faces.push_back({y, z, v});
  }
  return {b.build(), {}};
}

Generated maximal_outerplanar(int n, SplitMix64 &rng) {
  require(n >= 3, "maximal_outerplanar requires n >= 3");
  Builder b;
  b.add_vertices(3);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  std::vector<Edge> boundary{{0, 1}, {1, 2}, {2, 0}};
  for (int v = 3; v < n; ++v) {
    const auto i = rng.below(boundary.size());
    auto [x, y] = boundary[i];
    b.add_vertex();
    b.add_edge(x, v);
    b.add_edge(y, v);
    boundary[i] = {x, v};
    boundary.push_back({v, y});
  }
  return {b.build(), {}};
}

Generated random_gnp(const GenSpec &spec, SplitMix64 &rng) {
  require(spec.n >= 1 && spec.edge_probability >= 0.0 &&
              spec.edge_probability <= 1.0,
          "random_gnp requires n >= 1 and probability in [0, 1]");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < spec.n; ++u)
      for (int v = u + 1; v < spec.n; ++v)
        if (rng.unit() < spec.edge_probability)
          edges.emplace_back(u, v);
    Graph g(spec.n, edges);
    if (!spec.connected || is_connected(g))
      return {std::move(g), {}};
  }
  throw std::invalid_argument("random_gnp: no connected sample in 10000 tries");
}

} // namespace

std::string family_name(Family f) {
  for (auto [family, name] : kFamilyNames)
    if (family == f)
      return std::string(name);
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string canon(name);
  std::replace(canon.begin(), canon.end(), '_', '-');
  for (auto [family, known] : kFamilyNames)
    if (canon == known)
      return family;
  return std::nullopt;
}

Generated gen(const GenSpec &spec) {
  SplitMix64 rng(spec.seed);
  Generated out;
  Provenance prov;
  prov.family = family_name(spec.family);
  prov.seed = spec.seed;
  switch (spec.family) {
  case Family::random_tree:
    out = random_tree(spec.n, rng);
    prov.params = {{"n", spec.n}};
    break;
  case Family::random_forest:
    out = random_forest(spec, rng);
    prov.params = {{"n", spec.n},
                   {"isolated_vertices", spec.isolated_vertices},
                   {"isolated_edges", spec.isolated_edges}};
    break;
  case Family::random_ktree:
    out = random_ktree(spec.k, spec.n, rng);
    prov.params = {{"k", spec.k}, {"n", spec.n}};
    break;
  case Family::apollonian:
    out = apollonian(spec.n, rng);
    prov.params = {{"n", spec.n}};
    break;
  case Family::maximal_outerplanar:
    out = maximal_outerplanar(spec.n, rng);
    prov.params = {{"n", spec.n}};
    break;
  case Family::extremal_tree_ii:
    out = extremal_tree_ii(spec.p);
    prov.params = {{"p", spec.p}};
    break;
  case Family::extremal_tree_iii:
    out = extremal_tree_iii(spec.p);
    prov.params = {{"p", spec.p}};
    break;
  case Family::extremal_forest_i:
    out = extremal_forest_i(spec.p);
    prov.params = {{"p", spec.p}};
    break;
  case Family::extremal_forest_ii:
    out = extremal_forest_ii(spec.p);
    prov.params = {{"p", spec.p}};
    break;
  case Family::extremal_forest_iii:
    out = extremal_forest_iii(spec.q);
    prov.params = {{"q", spec.q}};
    break;
  case Family::random_gnp:
    out = random_gnp(spec, rng);
    prov.params = {{"n", spec.n},
                   {"edge_probability_ppm",
                    static_cast<std::int64_t>(spec.edge_probability * 1e6)},
                   {"connected", spec.connected}};
    break;
  }
  prov.expected = std::move(out.provenance.expected);
  prov.degree_counts = std::move(out.provenance.degree_counts);
  out.provenance = std::move(prov);
  return out;
}

bool is_forest(const Graph &g) {
  // Acyclic iff m = n - (number of components).
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b)
      return false;
    parent[a] = b;
  }
  return true;
}

bool is_tree(const Graph &g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_forest(g);
}

bool is_ktree(const Graph &g, int k) {
  const int n = g.order();
  if (k < 0 || n < k + 1)
    return false;
  const std::int64_t want =
      static_cast<std::int64_t>(k) * n - static_cast<std::int64_t>(k) * (k + 1) / 2;
  if (g.size() != want)
    return false;
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v)
    deg[v] = g.degree(v);
  auto alive_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v))
      if (alive[u])
        out.push_back(u);
    return out;
  };
  auto is_clique = [&](const std::vector<Vertex> &s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!g.has_edge(s[i], s[j]))
          return false;
    return true;
  };
  for (int remaining = n; remaining > k + 1; --remaining) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v)
      if (alive[v] && deg[v] == k && is_clique(alive_neighbors(v)))
        pick = v;
    if (pick < 0)
      return false;
    alive[pick] = false;
    for (Vertex u : g.neighbors(pick))
      --deg[u];
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v])
      rest.push_back(v);
  return is_clique(rest);
}

bool is_maximal_outerplanar(const Graph &g) {
  const int n = g.order();
  if (n < 3 || g.size() != 2 * n - 3 || !is_ktree(g, 2))
    return false;
  for (auto [u, v] : g.edges()) {
    int triangles = 0;
    for (Vertex w : g.neighbors(u))
      triangles += g.has_edge(v, w);
    if (triangles > 2)
      return false;
  }
  return true;
}

bool recognize(const Generated &gen) {
  const Graph &g = gen.graph;
  const auto family = parse_family(gen.provenance.family);
  if (!family)
    return false;
  bool ok = false;
  switch (*family) {
  case Family::random_tree:
  case Family::extremal_tree_ii:
  case Family::extremal_tree_iii:
    ok = is_tree(g);
    break;
  case Family::random_forest:
  case Family::extremal_forest_i:
  case Family::extremal_forest_ii:
  case Family::extremal_forest_iii:
    ok = is_forest(g);
    break;
  case Family::random_ktree:
    ok = is_ktree(g, static_cast<int>(gen.provenance.params.at("k")));
    break;
  case Family::apollonian:
    ok = is_ktree(g, 3) && g.size() == 3 * g.order() - 6 &&
         g.min_degree() == 3;
    break;
  case Family::maximal_outerplanar:
    ok = is_maximal_outerplanar(g);
    break;
  case Family::random_gnp:
    ok = !gen.provenance.params.at("connected") || is_connected(g);
    break;
  }
  if (!ok || gen.provenance.degree_counts.empty())
    return ok;
  auto view = degree_classes(g);
  int counted = 0;
  for (auto [degree, count] : gen.provenance.degree_counts) {
    if (view.count(degree) != count)
      return false;
    counted += count;
  }
  return counted == g.order();
}

} // namespace regind
