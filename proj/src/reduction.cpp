#include "regind/reduction.hpp"

#include "regind/solvers.hpp"

#include <stdexcept>

namespace regind {

BlowupMap blowup(const Graph &g, int k) {
  if (k < 0)
    throw std::invalid_argument("blowup: k must be non-negative");
  const int width = k + 1;
  BlowupMap out;
  out.k = k;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v)
    for (int i = 0; i < width; ++i) {
      out.origin.emplace_back(v, i);
      for (int j = i + 1; j < width; ++j)
        edges.emplace_back(v * width + i, v * width + j);
    }
  for (auto [u, v] : g.edges())
    for (int i = 0; i < width; ++i)
      for (int j = 0; j < width; ++j)
        edges.emplace_back(u * width + i, v * width + j);
  out.host = Graph(g.order() * width, edges);
  return out;
}

std::string write_origin_table(const BlowupMap &map) {
  std::string out;
  for (std::size_t x = 0; x < map.origin.size(); ++x)
    out += std::to_string(x) + " " + std::to_string(map.origin[x].first) + " " +
           std::to_string(map.origin[x].second) + "\n";
  return out;
}

ClaimsReport verify_claims(const Graph &g, int k) {
  ClaimsReport report;
  report.k = k;
  report.above_recommended_size = (k + 1) * g.order() > 30;
  const auto h = blowup(g, k);
  const auto base = alpha_k_exact(g, 0);
  report.alpha_g = base.size;
  report.alpha_h = alpha_k_exact(h.host, 0).size;
  report.alpha_k_h = alpha_k_exact(h.host, k).size;
  report.claim1 = report.alpha_h == report.alpha_g;
  report.claim2 = report.alpha_k_h == (k + 1) * report.alpha_g;

  WitnessSet lifted;
  lifted.k = k;
  for (Vertex v : base.witness.vertices)
    for (int i = 0; i <= k; ++i)
      lifted.vertices.push_back(v * (k + 1) + i);
  report.lifted_witness =
      verify_witness(h.host, lifted) &&
      static_cast<int>(lifted.vertices.size()) == (k + 1) * report.alpha_g;
  return report;
}

} // namespace regind
