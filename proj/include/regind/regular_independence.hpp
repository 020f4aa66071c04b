#pragma once

#include "regind/graph.hpp"
#include "regind/rational.hpp"
#include "regind/solvers.hpp"

#include <map>

namespace regind {

struct RegularIndependenceResult {
  int k = 0;
  /// alpha_{k,j} for every degree j that occurs in the graph.
  std::map<int, AlphaResult> per_degree;
  /// Smallest degree attaining the maximum (0 for the empty graph).
  int best_degree = 0;
  int best_size = 0;
  WitnessSet best;
};

/// alpha_k of the subgraph induced by the degree-j vertices; the witness is
/// expressed in host indices and tagged with uniform_degree = j.
AlphaResult alpha_kj(const Graph &g, int k, int j);

/// Regular k-independence number via one exact solve per degree class.
RegularIndependenceResult alpha_k_reg(const Graph &g, int k);

/// Largest number of vertices sharing one degree.
int rep(const Graph &g);

/// n / (2d - 2*delta + 1) with d = 2m/n, the repetition-number floor.
Rational rep_lower_bound(const Graph &g);

/// n / ((2d - 2*delta + 1) * chi_k_upper). chi_k_upper must dominate
/// chi_k(g); throws std::invalid_argument when it is zero or g is empty.
Rational benchmark_bound(const Graph &g, int k, int chi_k_upper);

} // namespace regind
