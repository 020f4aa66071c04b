#include "regind/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace regind {

ParseError::ParseError(int line, const std::string &what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0)
    throw GraphError("negative vertex count");
  words_ = (n + 63) / 64;
  adj_.resize(n);
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range");
    if (u == v)
      throw GraphError("loop at vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
    if (has_edge(u, v))
      throw GraphError("duplicate edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    rows_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto &nb : adj_)
    std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    return false;
  return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v)
    best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v)
    best = std::max(best, degree(v));
  return best;
}

int DegreeClassView::count(int degree) const {
  auto it = classes.find(degree);
  return it == classes.end() ? 0 : static_cast<int>(it->second.size());
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    return std::nullopt;
  return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (!line.empty() && line.front() == '#')
      continue;
    auto tok = tokens(line);
    if (tok.empty())
      continue;
    if (tok.size() != 2)
      throw ParseError(line_no, "expected two integers, found " +
                                    std::to_string(tok.size()) + " fields");
    auto a = to_int(tok[0]);
    auto b = to_int(tok[1]);
    if (n < 0) {
      if (!a || !b || *a < 0 || *b < 0 || *a > (1 << 24))
        throw ParseError(line_no, "malformed header, expected \"n m\"");
      n = *a;
      m = *b;
      if (m > n * (n - 1) / 2)
        throw ParseError(line_no, "header declares more edges than a simple "
                                  "graph on n vertices admits");
      continue;
    }
    if (!a || !b)
      throw ParseError(line_no, "malformed edge line");
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError(line_no, "more edge lines than declared in header");
    if (*a < 0 || *b < 0 || *a >= n || *b >= n)
      throw ParseError(line_no, "vertex index out of range [0, " +
                                    std::to_string(n) + ")");
    if (*a == *b)
      throw ParseError(line_no, "loop at vertex " + std::to_string(*a));
    Edge e{static_cast<Vertex>(std::min(*a, *b)),
           static_cast<Vertex>(std::max(*a, *b))};
    if (!seen.insert(e).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.first) +
                                    " " + std::to_string(e.second));
    edges.push_back(e);
  }
  if (n < 0)
    throw ParseError(std::max(line_no, 1), "missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph &g) {
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_edge_list_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph &g, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw GraphError("cannot write " + path);
  out << write_edge_list(g);
}

DegreeClassView degree_classes(const Graph &g) {
  DegreeClassView view;
  for (Vertex v = 0; v < g.order(); ++v)
    view.classes[g.degree(v)].push_back(v);
  return view;
}

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> s) {
  std::vector<int> local(g.order(), -1);
  InducedSubgraph out;
  for (Vertex v : s) {
    if (v < 0 || v >= g.order())
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    if (local[v] >= 0)
      continue;
    local[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for (Vertex w : g.neighbors(out.original[i]))
      if (local[w] > static_cast<int>(i))
        edges.emplace_back(static_cast<Vertex>(i), local[w]);
  out.graph = Graph(static_cast<int>(out.original.size()), edges);
  return out;
}

int induced_max_degree(const Graph &g, std::span<const Vertex> s) {
  int best = 0;
  for (Vertex v : s) {
    int d = 0;
    for (Vertex u : s)
      d += g.has_edge(u, v);
    best = std::max(best, d);
  }
  return best;
}

bool verify_witness(const Graph &g, const WitnessSet &w) {
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (Vertex v : sorted) {
    if (v < 0 || v >= g.order())
      return false;
    if (w.uniform_degree && g.degree(v) != *w.uniform_degree)
      return false;
  }
  return induced_max_degree(g, sorted) <= w.k;
}

DegeneracyOrder degeneracy_order(const Graph &g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v)
    deg[v] = g.degree(v);
  DegeneracyOrder out;
  out.order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick]))
        pick = v;
    out.degeneracy = std::max(out.degeneracy, deg[pick]);
    out.order.push_back(pick);
    removed[pick] = true;
    for (Vertex u : g.neighbors(pick))
      if (!removed[u])
        --deg[u];
  }
  return out;
}

bool is_connected(const Graph &g) {
  if (g.order() == 0)
    return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == g.order();
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i)
    e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

} // namespace regind
