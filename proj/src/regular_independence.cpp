#include "regind/regular_independence.hpp"

#include <stdexcept>

namespace regind {

AlphaResult alpha_kj(const Graph &g, int k, int j) {
  AlphaResult out;
  out.witness.k = k;
  out.witness.uniform_degree = j;
  auto view = degree_classes(g);
  auto it = view.classes.find(j);
  if (it == view.classes.end())
    return out;
  auto sub = induced_subgraph(g, it->second);
  auto local = alpha_k_exact(sub.graph, k);
  out.size = local.size;
  for (Vertex v : local.witness.vertices)
    out.witness.vertices.push_back(sub.original[v]);
  return out;
}

RegularIndependenceResult alpha_k_reg(const Graph &g, int k) {
  RegularIndependenceResult out;
  out.k = k;
  out.best.k = k;
  for (const auto &[degree, members] : degree_classes(g).classes) {
    auto result = alpha_kj(g, k, degree);
    if (result.size > out.best_size) {
      out.best_size = result.size;
      out.best_degree = degree;
      out.best = result.witness;
    }
    out.per_degree.emplace(degree, std::move(result));
  }
  return out;
}

int rep(const Graph &g) {
  int best = 0;
  for (const auto &[degree, members] : degree_classes(g).classes)
    best = std::max(best, static_cast<int>(members.size()));
  return best;
}

namespace {

// n * (2d - 2*delta + 1) with d = 2m/n, i.e. 4m - 2*delta*n + n.
std::int64_t scaled_spread(const Graph &g) {
  const std::int64_t n = g.order();
  return 4 * static_cast<std::int64_t>(g.size()) - 2 * g.min_degree() * n + n;
}

} // namespace

Rational rep_lower_bound(const Graph &g) {
  if (g.order() == 0)
    throw std::invalid_argument("rep_lower_bound: empty graph");
  const std::int64_t n = g.order();
  return Rational(n * n, scaled_spread(g));
}

Rational benchmark_bound(const Graph &g, int k, int chi_k_upper) {
  (void)k;
  if (chi_k_upper <= 0)
    throw std::invalid_argument("benchmark_bound: chi_k_upper must be >= 1");
  return rep_lower_bound(g) / Rational(chi_k_upper);
}

} // namespace regind
