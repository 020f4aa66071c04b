#include "oracle.hpp"

#include "regind/generators.hpp"
#include "regind/graph.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <numeric>

using namespace regind;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  GenSpec s;
  s.family = Family::random_gnp;
  s.n = n;
  s.edge_probability = p;
  s.seed = seed;
  return gen(s).graph;
}

} // namespace

TEST_CASE("parse: small graphs") {
  const Graph k2 = parse_edge_list("2 1\n0 1\n");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2 == complete_graph(2));

  const Graph p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(p4 == path_graph(4));

  // edges in either orientation, comments and blank lines
  CHECK(parse_edge_list("# path\n4 3\n\n1 0\n2 1\n3 2\n") == path_graph(4));
  CHECK(parse_edge_list("3 0\n").order() == 3);
}

TEST_CASE("parse: errors carry the line number") {
  CHECK(parse_error_line("3 3\n0 1\n0 1\n1 2\n") == 3); // duplicate
  CHECK(parse_error_line("3 1\n1 1\n") == 2);           // loop
  CHECK(parse_error_line("3 1\n0 3\n") == 2);           // out of range
  CHECK(parse_error_line("3 x\n") == 1);
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("3 2\n0 1\n") != 0);            // too few edges
  CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);      // too many edges
  CHECK(parse_error_line("3 4\n") == 1);                // more than n(n-1)/2
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
  CHECK(parse_error_line("-1 0\n") == 1);
}

TEST_CASE("graph: construction rejects bad edges") {
  const std::vector<Edge> loop{{1, 1}}, dup{{0, 1}, {1, 0}}, far{{0, 5}};
  CHECK_THROWS_AS(Graph(3, loop), GraphError);
  CHECK_THROWS_AS(Graph(3, dup), GraphError);
  CHECK_THROWS_AS(Graph(3, far), GraphError);
}

TEST_CASE("graph: degree invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 30), 0.3, seed);
    int sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(g.degree(v) == static_cast<int>(g.neighbors(v).size()));
      CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
      for (Vertex u : g.neighbors(v)) {
        CHECK(u != v);
        CHECK(g.has_edge(u, v));
      }
      sum += g.degree(v);
    }
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("parse/write round trip is bit exact") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = seed == 0 ? Graph() : random_graph(1 + static_cast<int>(seed % 24), 0.25, seed);
    const std::string text = write_edge_list(g);
    const Graph back = parse_edge_list(text);
    CHECK(back == g);
    CHECK(write_edge_list(back) == text);
  }
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "regind_graph_test.el";
  write_edge_list_file(petersen_graph(), path.string());
  CHECK(read_edge_list_file(path.string()) == petersen_graph());
  std::filesystem::remove(path);
  CHECK_THROWS(read_edge_list_file("/nonexistent/graph.el"));
}

TEST_CASE("degree classes") {
  auto p4 = degree_classes(path_graph(4));
  CHECK(p4.classes.size() == 2);
  CHECK(p4.classes[1] == std::vector<Vertex>{0, 3});
  CHECK(p4.classes[2] == std::vector<Vertex>{1, 2});

  auto star = degree_classes(star_graph(3));
  CHECK(star.count(1) == 3);
  CHECK(star.count(3) == 1);
  CHECK(star.count(2) == 0);

  auto c6 = degree_classes(cycle_graph(6));
  CHECK(c6.classes.size() == 1);
  CHECK(c6.count(2) == 6);
}

TEST_CASE("degree classes partition V and the induced class keeps degree <= j") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 20), 0.35, seed);
    const auto view = degree_classes(g);
    std::vector<int> seen(g.order(), 0);
    int total = 0;
    for (const auto &[j, members] : view.classes) {
      CHECK(j >= g.min_degree());
      CHECK(j <= g.max_degree());
      total += static_cast<int>(members.size());
      for (Vertex v : members) {
        CHECK(g.degree(v) == j);
        ++seen[v];
      }
      const auto sub = induced_subgraph(g, members);
      if (sub.graph.order() > 0)
        CHECK(sub.graph.max_degree() <= j);
    }
    CHECK(total == g.order());
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("induced subgraph") {
  const Graph c6 = cycle_graph(6);
  std::vector<Vertex> everything(6);
  std::iota(everything.begin(), everything.end(), 0);
  CHECK(induced_subgraph(c6, everything).graph == c6);

  const std::vector<Vertex> mid{1, 2};
  const auto k2 = induced_subgraph(path_graph(4), mid);
  CHECK(k2.graph == complete_graph(2));
  CHECK(k2.original == mid);

  const std::vector<Vertex> tri{0, 1, 2};
  CHECK(induced_subgraph(complete_graph(4), tri).graph == complete_graph(3));

  const std::vector<Vertex> bad{0, 9};
  CHECK_THROWS(induced_subgraph(c6, bad));
}

TEST_CASE("verify witness") {
  const Graph p4 = path_graph(4);
  CHECK(verify_witness(p4, {{0, 3}, 0, 1}));
  CHECK_FALSE(verify_witness(p4, {{1, 2}, 0, 2}));
  CHECK(verify_witness(p4, {{1, 2}, 1, 2}));
  CHECK_FALSE(verify_witness(p4, {{0, 1}, 1, 1})); // vertex 1 has degree 2
  CHECK(verify_witness(p4, {{0, 1}, 1, std::nullopt}));
  CHECK(verify_witness(p4, {{}, 0, std::nullopt}));
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy_order(path_graph(7)).degeneracy == 1);
  CHECK(degeneracy_order(star_graph(5)).degeneracy == 1);
  CHECK(degeneracy_order(petersen_graph()).degeneracy == 3);
  CHECK(degeneracy_order(complete_graph(5)).degeneracy == 4);
  CHECK(degeneracy_order(Graph(3, {})).degeneracy == 0);

  // lowest index among the minimum-degree vertices goes first
  const auto p4 = degeneracy_order(path_graph(4));
  CHECK(p4.order == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("degeneracy of an induced subgraph never exceeds the host's") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(5 + static_cast<int>(seed % 20), 0.3, seed);
    const int host = degeneracy_order(g).degeneracy;
    std::vector<Vertex> half;
    for (Vertex v = 0; v < g.order(); v += 2)
      half.push_back(v);
    CHECK(degeneracy_order(induced_subgraph(g, half).graph).degeneracy <= host);
  }
}

TEST_CASE("named graphs") {
  CHECK(petersen_graph().order() == 10);
  CHECK(petersen_graph().size() == 15);
  CHECK(petersen_graph().min_degree() == 3);
  CHECK(petersen_graph().max_degree() == 3);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(star_graph(4).order() == 5);
  CHECK(is_connected(petersen_graph()));
  CHECK_FALSE(is_connected(Graph(2, {})));
}
