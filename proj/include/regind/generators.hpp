#pragma once

#include "regind/graph.hpp"
#include "regind/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regind {

/// splitmix64: 64-bit state advanced by the golden-ratio increment.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [0, bound), rejection sampled. bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();

private:
  std::uint64_t state_;
};

enum class Family {
  random_tree,
  random_forest,
  random_ktree,
  apollonian,
  maximal_outerplanar,
  extremal_tree_ii,
  extremal_tree_iii,
  extremal_forest_i,
  extremal_forest_ii,
  extremal_forest_iii,
  random_gnp,
};

std::string family_name(Family f);
/// Accepts both "extremal-tree-iii" and "extremal_tree_iii".
std::optional<Family> parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::random_tree;
  int n = 0; // random_*, apollonian, maximal_outerplanar
  int p = 0; // extremal_tree_ii/iii, extremal_forest_i/ii
  int q = 0; // extremal_forest_iii
  int k = 0; // random_ktree
  std::uint64_t seed = 0;
  // random_forest: components besides the random trees.
  int isolated_vertices = 0;
  int isolated_edges = 0;
  // random_gnp
  double edge_probability = 0.5;
  bool connected = false;
};

/// A value the construction is known to attain exactly.
struct ExpectedValue {
  std::string invariant; // "alpha_k_reg"
  int k = 0;
  Rational value;
};

struct Provenance {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;
  std::vector<ExpectedValue> expected;
  /// degree -> n_j, when the construction fixes the degree sequence.
  std::map<int, int> degree_counts;
};

struct Generated {
  Graph graph;
  Provenance provenance;
};

/// Deterministic for (family, parameters, seed). Throws std::invalid_argument
/// for parameters outside the family's domain.
Generated gen(const GenSpec &spec);

/// Runs the recognizer matching the provenance family and checks any
/// recorded degree counts.
bool recognize(const Generated &g);

bool is_tree(const Graph &g);
bool is_forest(const Graph &g);

/// Peels simplicial degree-k vertices (lowest index first) down to K_{k+1}.
bool is_ktree(const Graph &g, int k);

/// 2n - 3 edges, peels to K3 through simplicial degree-2 vertices, and no
/// edge lies on three triangles.
bool is_maximal_outerplanar(const Graph &g);

Graph pruefer_decode(std::span<const int> sequence);

/// Center-rooted AHU encoding; equal strings iff the trees are isomorphic.
std::string tree_canonical_form(const Graph &tree);

/// All free trees on n vertices up to isomorphism (1 <= n <= 12), labelled
/// in preorder of their canonical form and sorted by it.
std::vector<Graph> enumerate_trees(int n);

/// Reference enumeration through all n^(n-2) Pruefer sequences (n <= 9).
std::vector<Graph> enumerate_trees_pruefer(int n);

/// All connected graphs on n vertices up to isomorphism (1 <= n <= 6).
std::vector<Graph> enumerate_connected_graphs(int n);

} // namespace regind
