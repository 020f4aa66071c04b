#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regind {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by parse_edge_list; carries the 1-based line number of the offence.
class ParseError : public GraphError {
public:
  ParseError(int line, const std::string &what);
  int line() const { return line_; }

private:
  int line_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted ascending. A row-wise adjacency bitmap backs
/// has_edge() so membership tests stay O(1) for the solvers.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Edges may be given in either
  /// orientation; loops, duplicates and out-of-range endpoints throw
  /// GraphError.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex> &neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge> &edges() const { return edges_; }

  int min_degree() const;
  int max_degree() const;

  bool operator==(const Graph &other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> rows_;
};

/// Vertices grouped by degree, ascending index within each class.
struct DegreeClassView {
  std::map<int, std::vector<Vertex>> classes;

  int count(int degree) const;
};

/// A vertex set claimed to be k-independent, optionally degree-uniform.
struct WitnessSet {
  std::vector<Vertex> vertices;
  int k = 0;
  std::optional<int> uniform_degree;
};

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the host vertex behind vertex i of `graph`.
  std::vector<Vertex> original;
};

struct DegeneracyOrder {
  std::vector<Vertex> order;
  int degeneracy = 0;
};

Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph &g);

Graph read_edge_list_file(const std::string &path);
void write_edge_list_file(const Graph &g, const std::string &path);

DegreeClassView degree_classes(const Graph &g);

/// Vertices of `s` keep their relative order; duplicates in `s` are ignored.
InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> s);

bool verify_witness(const Graph &g, const WitnessSet &w);

/// Maximum degree of the subgraph induced by `s`.
int induced_max_degree(const Graph &g, std::span<const Vertex> s);

/// Repeatedly removes a minimum-degree vertex (lowest index on ties).
DegeneracyOrder degeneracy_order(const Graph &g);

bool is_connected(const Graph &g);

// Small named graphs used throughout tests and the harness.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

} // namespace regind
