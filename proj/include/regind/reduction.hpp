#pragma once

#include "regind/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace regind {

/// G_{k+1}: every vertex v of G becomes a clique K_v on k+1 vertices and
/// cliques of adjacent vertices are joined completely. H-vertex (v, i) has
/// index v*(k+1) + i.
struct BlowupMap {
  Graph host;
  int k = 0;
  /// origin[x] = (G-vertex, copy index) for every H-vertex x.
  std::vector<std::pair<Vertex, int>> origin;
};

BlowupMap blowup(const Graph &g, int k);

/// Origin table, one "x v i" line per H-vertex.
std::string write_origin_table(const BlowupMap &map);

struct ClaimsReport {
  int k = 0;
  int alpha_g = 0;
  int alpha_h = 0;
  int alpha_k_h = 0;
  /// alpha(H) == alpha(G)
  bool claim1 = false;
  /// alpha_k(H) == (k+1) alpha(G)
  bool claim2 = false;
  /// The union of cliques over a maximum independent set of G is a
  /// k-independent set of H.
  bool lifted_witness = false;
  /// Set when (k+1)n exceeds the exact solvers' comfortable range (30).
  bool above_recommended_size = false;

  bool ok() const { return claim1 && claim2 && lifted_witness; }
};

ClaimsReport verify_claims(const Graph &g, int k);

} // namespace regind
