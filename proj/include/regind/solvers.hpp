#pragma once

#include "regind/graph.hpp"

#include <optional>
#include <vector>

namespace regind {

struct AlphaResult {
  int size = 0;
  WitnessSet witness;
};

/// A k-defective coloring: disjoint classes covering V, each inducing
/// maximum degree at most k.
struct Partition {
  std::vector<std::vector<Vertex>> classes;
  int k = 0;
  /// Local-search moves performed (lovasz_partition only).
  int moves = 0;
};

struct FairDomination {
  int size = 0;
  std::vector<Vertex> set;
};

/// Maximum k-independent set by branch and bound.
///
/// Works component by component. Within a component vertices are branched on
/// in descending degree order; the bound at each node is the current size
/// plus a greedy clique cover of the candidates where each clique contributes
/// at most k+1 vertices. Components above 1024 vertices are rejected with
/// std::length_error. The witness is deterministic for a given graph.
AlphaResult alpha_k_exact(const Graph &g, int k);

/// Exhaustive 2^n reference for alpha_k_exact. Throws std::length_error for
/// n > 24.
AlphaResult alpha_k_brute_force(const Graph &g, int k);

int chi_exact(const Graph &g);

/// Minimum number of classes in a k-defective coloring.
int chi_k_exact(const Graph &g, int k);

/// Exact partition realising chi_k_exact.
Partition chi_k_partition(const Graph &g, int k);

/// ceil((Delta + 1) / (k + 1)), the class count used by lovasz_partition.
int lovasz_class_count(const Graph &g, int k);

/// Local search for a k-defective coloring with lovasz_class_count classes.
///
/// Starts from the round-robin coloring v -> v mod t and sweeps vertices in
/// ascending order, moving any vertex with more than k same-class neighbors
/// to the class where it has the fewest neighbors (lowest class index on
/// ties). Each move strictly lowers the number of monochromatic edges.
Partition lovasz_partition(const Graph &g, int k);

/// True when the classes are disjoint, cover V(g), and are k-independent.
bool is_defective_coloring(const Graph &g, const Partition &p);

/// Minimum fair dominating set by enumeration in order of size.
/// Returns nullopt when the graph has an isolated vertex (or no vertices).
/// Throws std::length_error for n > 24.
std::optional<FairDomination> fd_exact(const Graph &g);

} // namespace regind
