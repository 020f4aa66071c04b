#include "oracle.hpp"

#include "regind/generators.hpp"
#include "regind/regular_independence.hpp"

#include <doctest.h>

using namespace regind;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  GenSpec s;
  s.family = Family::random_gnp;
  s.n = n;
  s.edge_probability = p;
  s.seed = seed;
  return gen(s).graph;
}

} // namespace

TEST_CASE("alpha_kj on P4") {
  const Graph p4 = path_graph(4);
  CHECK(alpha_kj(p4, 0, 1).size == 2);
  CHECK(alpha_kj(p4, 0, 2).size == 1);
  CHECK(alpha_kj(p4, 1, 2).size == 2);
  CHECK(alpha_kj(p4, 0, 3).size == 0);
  const auto w = alpha_kj(p4, 1, 2).witness;
  CHECK(w.uniform_degree == 2);
  CHECK(w.vertices == std::vector<Vertex>{1, 2});
}

TEST_CASE("alpha_k_reg examples") {
  const auto p4 = alpha_k_reg(path_graph(4), 0);
  CHECK(p4.best_size == 2);
  CHECK(p4.best_degree == 1);

  GenSpec s;
  s.family = Family::extremal_tree_iii;
  s.p = 1;
  const Graph t = gen(s).graph;
  CHECK(t.order() == 7);
  CHECK(alpha_k_reg(t, 2).best_size == 3);

  const auto star = alpha_k_reg(star_graph(5), 0);
  CHECK(star.best_size == 5);
  CHECK(star.best_degree == 1);

  for (int k : {0, 1, 2})
    CHECK(alpha_k_reg(path_graph(4), k).best_size == 2);
  CHECK(alpha_k_reg(cycle_graph(6), 0).best_size == 3);
  CHECK(alpha_k_reg(Graph(), 0).best_size == 0);
}

TEST_CASE("ties go to the smallest degree") {
  // K2 plus two isolated vertices: at k = 1 both degree classes give 2.
  const Graph g(4, std::vector<Edge>{{0, 1}});
  const auto r = alpha_k_reg(g, 1);
  CHECK(r.best_size == 2);
  CHECK(r.best_degree == 0);
}

TEST_CASE("alpha_k_reg: definition, witness, max over classes") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 14), 0.35, seed);
    for (int k = 0; k <= 2; ++k) {
      const auto r = alpha_k_reg(g, k);
      CHECK(r.best_size == oracle::alpha_k_reg(g, k));
      int best = 0;
      for (const auto &[j, a] : r.per_degree) {
        CHECK(a.size == alpha_kj(g, k, j).size);
        best = std::max(best, a.size);
      }
      CHECK(r.best_size == best);
      CHECK(r.best.uniform_degree == r.best_degree);
      CHECK(static_cast<int>(r.best.vertices.size()) == r.best_size);
      CHECK(verify_witness(g, r.best));
    }
  }
}

TEST_CASE("regular graphs: alpha_k_reg = alpha_k") {
  for (const Graph &g : {cycle_graph(7), petersen_graph(), complete_graph(5), cycle_graph(10)})
    for (int k = 0; k <= 2; ++k)
      CHECK(alpha_k_reg(g, k).best_size == alpha_k_exact(g, k).size);
}

TEST_CASE("rep") {
  CHECK(rep(cycle_graph(6)) == 6);
  CHECK(rep(path_graph(4)) == 2);
  CHECK(rep(star_graph(3)) == 3);
  CHECK(rep(Graph()) == 0);
}

TEST_CASE("benchmark bound examples") {
  CHECK(benchmark_bound(cycle_graph(6), 0, 2) == Rational(3));
  CHECK(benchmark_bound(cycle_graph(5), 2, 1) == Rational(5));
  CHECK(benchmark_bound(path_graph(4), 0, 2) == Rational(1));
  CHECK(alpha_k_reg(cycle_graph(5), 2).best_size == 5);
  CHECK_THROWS_AS(benchmark_bound(path_graph(4), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(benchmark_bound(Graph(), 0, 1), std::invalid_argument);
}

TEST_CASE("rep and benchmark relations on random graphs") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 16), 0.4, seed);
    // n / (2d - 2 delta + 1) computed from scratch
    const Rational d(2 * g.size(), g.order());
    const Rational floor_value =
        Rational(g.order()) / (Rational(2) * d - Rational(2 * g.min_degree()) + Rational(1));
    CHECK(rep_lower_bound(g) == floor_value);
    CHECK(Rational(rep(g)) >= floor_value);
    for (int k = 0; k <= 2; ++k)
      CHECK(benchmark_bound(g, k, chi_k_exact(g, k)) <= Rational(alpha_k_reg(g, k).best_size));
  }
}
