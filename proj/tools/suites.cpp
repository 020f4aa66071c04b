#include "harness.hpp"

#include "regind/bounds.hpp"
#include "regind/reduction.hpp"
#include "regind/regular_independence.hpp"
#include "regind/solvers.hpp"

#include <cstdio>
#include <functional>
#include <memory>
#include <map>
#include <stdexcept>

namespace regind::harness {

namespace {

std::string pad(long long v, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*lld", width, v);
  return buf;
}

std::string kname(const std::string &stem, int k) {
  return stem + "_k" + std::to_string(k);
}

/// Caches alpha_{k-reg} per k for one graph.
class Eval {
public:
  explicit Eval(const Graph &g) : g_(g) {}

  int alpha_reg(int k) {
    auto it = cache_.find(k);
    if (it == cache_.end())
      it = cache_.emplace(k, alpha_k_reg(g_, k).best_size).first;
    return it->second;
  }

  void record(Case &c) const {
    c.invariants["n"] = g_.order();
    c.invariants["m"] = g_.size();
    for (auto [k, a] : cache_)
      c.invariants[kname("alpha_reg", k)] = a;
  }

private:
  const Graph &g_;
  std::map<int, int> cache_;
};

constexpr int kCrossValidateMaxN = 14;
constexpr int kExactChiMaxN = 16;

/// rep >= n/(2d - 2 delta + 1) and the benchmark bound at k = 0, 1, 2.
void relation_checks(Case &c, const Graph &g, Eval &eval) {
  if (g.order() == 0)
    return;
  c.checks.push_back(at_least("rep", Rational(rep(g)), rep_lower_bound(g)));
  for (int k : {0, 1, 2}) {
    const int chi = g.order() <= kExactChiMaxN ? chi_k_exact(g, k)
                                                : lovasz_class_count(g, k);
    c.checks.push_back(at_most(kname("benchmark", k), benchmark_bound(g, k, chi),
                               Rational(eval.alpha_reg(k))));
  }
}

/// Branch and bound against the 2^n oracle, on the whole graph and on every
/// degree class.
void crossval_checks(Case &c, const Graph &g) {
  if (g.order() > kCrossValidateMaxN)
    return;
  const auto classes = degree_classes(g);
  for (int k : {0, 1, 2}) {
    const auto fast = alpha_k_exact(g, k);
    c.checks.push_back(equals(kname("crossval", k), Rational(fast.size),
                              Rational(alpha_k_brute_force(g, k).size)));
    bool ok = verify_witness(g, fast.witness) &&
              static_cast<int>(fast.witness.vertices.size()) == fast.size;
    for (const auto &[j, members] : classes.classes) {
      const auto sub = induced_subgraph(g, members);
      ok = ok && alpha_kj(g, k, j).size == alpha_k_brute_force(sub.graph, k).size;
    }
    c.checks.push_back(holds(kname("crossval_classes", k), ok));
  }
}

void common_checks(Case &c, const Graph &g, Eval &eval) {
  crossval_checks(c, g);
  relation_checks(c, g, eval);
}

/// Exact equality with every value the generator recorded, plus membership.
void expected_checks(Case &c, const Generated &gen, Eval &eval) {
  c.checks.push_back(holds("recognized", recognize(gen)));
  for (const auto &e : gen.provenance.expected)
    c.checks.push_back(equals(kname("sharp", e.k), Rational(eval.alpha_reg(e.k)),
                              e.value));
}

Case generated_case(std::string id, const GenSpec &spec,
                    const std::function<void(Case &, const Graph &, Eval &)> &extra) {
  Case c;
  c.id = std::move(id);
  const auto gen = regind::gen(spec);
  c.provenance = provenance_json(gen.provenance);
  Eval eval(gen.graph);
  expected_checks(c, gen, eval);
  if (extra)
    extra(c, gen.graph, eval);
  common_checks(c, gen.graph, eval);
  eval.record(c);
  return c;
}

using Task = std::function<Case()>;

std::vector<Case> run_tasks(const std::vector<Task> &tasks) {
  return parallel_map<Case>(tasks.size(),
                            [&](std::size_t i) { return tasks[i](); });
}

std::vector<int> ks_or(const SuiteOptions &o, std::vector<int> fallback) {
  return o.ks.empty() ? fallback : o.ks;
}

GenSpec spec_of(Family f) {
  GenSpec s;
  s.family = f;
  return s;
}

// Extremal families for the tree bounds: tree_ii (p = 1..4), tree_iii
// (p = 0..5).
void extremal_tree_tasks(std::vector<Task> &tasks, const std::string &suite) {
  for (int p = 1; p <= 4; ++p)
    tasks.push_back([=] {
      auto s = spec_of(Family::extremal_tree_ii);
      s.p = p;
      return generated_case(suite + "/extremal-tree-ii/p" + pad(p, 2), s, {});
    });
  for (int p = 0; p <= 5; ++p)
    tasks.push_back([=] {
      auto s = spec_of(Family::extremal_tree_iii);
      s.p = p;
      return generated_case(suite + "/extremal-tree-iii/p" + pad(p, 2), s, {});
    });
}

SuiteReport trees_suite(const SuiteOptions &o) {
  const int max_n = o.max_n.value_or(10);
  if (max_n > 12)
    throw std::invalid_argument("trees: --max-n is at most 12");
  const auto ks = ks_or(o, {0, 1, 2});
  std::vector<Task> tasks;
  for (int n = 2; n <= max_n; ++n) {
    auto trees = std::make_shared<std::vector<Graph>>(enumerate_trees(n));
    for (std::size_t i = 0; i < trees->size(); ++i)
      tasks.push_back([=] {
        const Graph &g = (*trees)[i];
        Case c;
        c.id = "trees/n" + pad(n, 2) + "/t" + pad(static_cast<long long>(i), 4);
        c.provenance = {{"family", "enumerated-tree"},
                        {"n", n},
                        {"index", i},
                        {"canonical", tree_canonical_form(g)}};
        Eval eval(g);
        for (int k : ks)
          c.checks.push_back(at_least(kname("tree", k), Rational(eval.alpha_reg(k)),
                                      tree_forest_bound(ForestFamily::tree, k, n)));
        common_checks(c, g, eval);
        eval.record(c);
        return c;
      });
  }
  extremal_tree_tasks(tasks, "trees");
  return {"trees", run_tasks(tasks)};
}

SuiteReport forests_suite(const SuiteOptions &o) {
  const int max_n = o.max_n.value_or(14);
  const int seeds = o.seeds.value_or(50);
  const auto ks = ks_or(o, {0, 1, 2});
  std::vector<Task> tasks;
  for (int p = 2; p <= 4; ++p)
    tasks.push_back([=] {
      auto s = spec_of(Family::extremal_forest_i);
      s.p = p;
      return generated_case("forests/extremal-forest-i/p" + pad(p, 2), s, {});
    });
  for (int p = 1; p <= 3; ++p)
    tasks.push_back([=] {
      auto s = spec_of(Family::extremal_forest_ii);
      s.p = p;
      return generated_case("forests/extremal-forest-ii/p" + pad(p, 2), s, {});
    });
  for (int q = 1; q <= 5; ++q)
    tasks.push_back([=] {
      auto s = spec_of(Family::extremal_forest_iii);
      s.q = q;
      return generated_case("forests/extremal-forest-iii/q" + pad(q, 2), s, {});
    });
  for (int seed = 0; seed < seeds; ++seed)
    tasks.push_back([=] {
      auto s = spec_of(Family::random_forest);
      s.seed = static_cast<std::uint64_t>(seed);
      s.n = 1 + seed % max_n;
      s.isolated_vertices = (seed / 3) % 3;
      s.isolated_edges = (seed / 7) % 2;
      while (s.isolated_vertices + 2 * s.isolated_edges > s.n) {
        s.isolated_vertices = 0;
        s.isolated_edges = 0;
      }
      return generated_case(
          "forests/random/s" + pad(seed, 4), s,
          [&ks](Case &c, const Graph &g, Eval &eval) {
            for (int k : ks)
              c.checks.push_back(
                  at_least(kname("forest", k), Rational(eval.alpha_reg(k)),
                           tree_forest_bound(ForestFamily::forest, k, g.order())));
          });
    });
  return {"forests", run_tasks(tasks)};
}

int chi_of_class(const Graph &g, const std::vector<Vertex> &members) {
  return chi_exact(induced_subgraph(g, members).graph);
}

SuiteReport ktrees_suite(const SuiteOptions &o) {
  const int max_n = o.max_n.value_or(24);
  const int seeds = o.seeds.value_or(50);
  const auto ks = ks_or(o, {2, 3, 4});
  std::vector<Task> tasks;
  for (int k : ks) {
    if (k < 1 || k >= max_n)
      throw std::invalid_argument("ktrees: need 1 <= k < max-n");
    const auto table = derive_table1(k);
    for (int seed = 0; seed < seeds; ++seed)
      tasks.push_back([=] {
        auto s = spec_of(Family::random_ktree);
        s.k = k;
        s.seed = static_cast<std::uint64_t>(seed);
        s.n = k + 1 + seed % (max_n - k);
        auto check = [=](Case &c, const Graph &g, Eval &eval) {
          const int n = g.order();
          c.checks.push_back(holds("is_ktree", is_ktree(g, k)));
          if (n >= table.profile.min_n)
            c.checks.push_back(at_least("table1", Rational(eval.alpha_reg(0)),
                                        table.at(n)));
          const auto classes = degree_classes(g);
          for (int t = 0; n >= k + t + 2; ++t) {
            auto it = classes.classes.find(k + t);
            if (it == classes.classes.end())
              continue;
            const auto sub = induced_subgraph(g, it->second);
            const std::string tag = "_t" + std::to_string(t);
            c.checks.push_back(at_most("class_chi" + tag,
                                       Rational(chi_of_class(g, it->second)),
                                       Rational(t * t + t + 2, 2)));
            c.checks.push_back(
                at_most("class_degeneracy" + tag,
                        Rational(degeneracy_order(sub.graph).degeneracy),
                        Rational(t * t + t, 2)));
          }
          for (int t = 1; t < n; ++t)
            if (n == k + t + 2)
              c.checks.push_back(at_most("class_count_t" + std::to_string(t),
                                         Rational(classes.count(k + t)),
                                         Rational(t + 1)));
        };
        return generated_case("ktrees/k" + pad(k, 2) + "/s" + pad(seed, 4), s,
                              check);
      });
  }
  return {"ktrees", run_tasks(tasks)};
}

void profile_checks(Case &c, Eval &eval, int n,
                    std::initializer_list<CapProfile> profiles) {
  for (const auto &profile : profiles) {
    if (n < profile.min_n)
      continue;
    const auto bound = optimize_r(profile);
    c.checks.push_back(at_least(profile.name(),
                                Rational(eval.alpha_reg(profile.k)), bound.at(n)));
  }
}

SuiteReport planar_suite(const SuiteOptions &o) {
  const int max_n = o.max_n.value_or(24);
  const int seeds = o.seeds.value_or(50);
  if (max_n < 4)
    throw std::invalid_argument("planar: --max-n must be at least 4");
  std::vector<Task> tasks;
  for (int seed = 0; seed < seeds; ++seed) {
    tasks.push_back([=] {
      auto s = spec_of(Family::apollonian);
      s.seed = static_cast<std::uint64_t>(seed);
      s.n = 4 + seed % (max_n - 3);
      return generated_case(
          "planar/apollonian/s" + pad(seed, 4), s,
          [](Case &c, const Graph &g, Eval &eval) {
            const int n = g.order();
            c.checks.push_back(holds("is_3tree", is_ktree(g, 3)));
            c.checks.push_back(equals("edges", Rational(g.size()),
                                      Rational(3 * n - 6)));
            c.checks.push_back(equals("min_degree", Rational(g.min_degree()),
                                      Rational(3)));
            profile_checks(c, eval, n,
                           {maximal_planar_profile(3, 0), maximal_planar_profile(3, 2),
                            planar_profile(3, 0), planar_profile(3, 2)});
          });
    });
    tasks.push_back([=] {
      auto s = spec_of(Family::maximal_outerplanar);
      s.seed = static_cast<std::uint64_t>(seed);
      s.n = 3 + seed % (max_n - 2);
      return generated_case(
          "planar/maximal-outerplanar/s" + pad(seed, 4), s,
          [](Case &c, const Graph &g, Eval &eval) {
            c.checks.push_back(holds("is_2tree", is_ktree(g, 2)));
            c.checks.push_back(
                holds("is_maximal_outerplanar", is_maximal_outerplanar(g)));
            profile_checks(c, eval, g.order(),
                           {maximal_outerplanar_profile(0),
                            maximal_outerplanar_profile(2), outerplanar_profile(0),
                            outerplanar_profile(2)});
          });
    });
  }
  return {"planar", run_tasks(tasks)};
}

Case reduction_case(std::string id, json provenance, const Graph &g, int k) {
  Case c;
  c.id = std::move(id);
  c.provenance = std::move(provenance);
  c.provenance["k"] = k;
  const auto report = verify_claims(g, k);
  const auto h = blowup(g, k);
  const std::int64_t n = g.order(), m = g.size();
  c.invariants = {{"alpha_g", report.alpha_g},
                  {"alpha_h", report.alpha_h},
                  {"alpha_k_h", report.alpha_k_h}};
  c.checks.push_back(equals("claim1", Rational(report.alpha_h), Rational(report.alpha_g)));
  c.checks.push_back(equals("claim2", Rational(report.alpha_k_h),
                            Rational((k + 1) * report.alpha_g)));
  c.checks.push_back(holds("lifted_witness", report.lifted_witness));
  c.checks.push_back(equals("host_order", Rational(h.host.order()), Rational((k + 1) * n)));
  c.checks.push_back(equals("host_size", Rational(h.host.size()),
                            Rational(n * k * (k + 1) / 2 + m * (k + 1) * (k + 1))));
  if (n > 0 && g.min_degree() == g.max_degree()) {
    const int r = g.min_degree();
    c.checks.push_back(
        holds("regular_transfer", h.host.min_degree() == (k + 1) * r + k &&
                                      h.host.max_degree() == (k + 1) * r + k));
  }
  Eval eval(g);
  common_checks(c, g, eval);
  return c;
}

SuiteReport reduction_suite(const SuiteOptions &o) {
  const int max_n = o.max_n.value_or(6);
  const auto ks = ks_or(o, {1, 2});
  constexpr int kHostLimit = 24;
  std::vector<Task> tasks;
  for (int k : ks) {
    if (k < 0)
      throw std::invalid_argument("reduction: k must be non-negative");
    for (int n = 1; n <= std::min(max_n + 1, 12); ++n) {
      if ((k + 1) * n > kHostLimit)
        continue;
      auto trees = std::make_shared<std::vector<Graph>>(enumerate_trees(n));
      for (std::size_t i = 0; i < trees->size(); ++i)
        tasks.push_back([=] {
          return reduction_case("reduction/k" + pad(k, 2) + "/tree/n" + pad(n, 2) +
                                    "/t" + pad(static_cast<long long>(i), 4),
                                {{"family", "enumerated-tree"}, {"n", n}, {"index", i}},
                                (*trees)[i], k);
        });
    }
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
      if ((k + 1) * n > kHostLimit)
        continue;
      auto graphs = std::make_shared<std::vector<Graph>>(enumerate_connected_graphs(n));
      for (std::size_t i = 0; i < graphs->size(); ++i)
        tasks.push_back([=] {
          return reduction_case("reduction/k" + pad(k, 2) + "/graph/n" + pad(n, 2) +
                                    "/g" + pad(static_cast<long long>(i), 4),
                                {{"family", "enumerated-connected"}, {"n", n}, {"index", i}},
                                (*graphs)[i], k);
        });
    }
  }
  return {"reduction", run_tasks(tasks)};
}

SuiteReport benchmark_suite(const SuiteOptions &o) {
  const int max_n = o.max_n.value_or(50);
  const int seeds = o.seeds.value_or(100);
  const auto ks = ks_or(o, {1, 2, 3});
  constexpr int kFdSeeds = 200, kFdMaxN = 10;
  std::vector<Task> tasks;
  for (int seed = 0; seed < seeds; ++seed)
    tasks.push_back([=] {
      auto s = spec_of(Family::random_gnp);
      s.seed = static_cast<std::uint64_t>(seed);
      s.n = 1 + seed % max_n;
      s.edge_probability = seed % 2 == 0 ? 0.1 : 0.3;
      return generated_case(
          "benchmark/gnp/s" + pad(seed, 4), s,
          [&ks](Case &c, const Graph &g, Eval &) {
            for (int k : ks) {
              const auto part = lovasz_partition(g, k);
              const std::string tag = "_k" + std::to_string(k);
              c.checks.push_back(at_most("lovasz_classes" + tag,
                                         Rational(static_cast<std::int64_t>(part.classes.size())),
                                         Rational(lovasz_class_count(g, k))));
              c.checks.push_back(holds("lovasz_valid" + tag, is_defective_coloring(g, part)));
              c.checks.push_back(at_most("lovasz_moves" + tag, Rational(part.moves),
                                         Rational(g.size())));
            }
          });
    });
  for (int seed = 0; seed < kFdSeeds; ++seed)
    tasks.push_back([=] {
      auto s = spec_of(Family::random_gnp);
      s.seed = static_cast<std::uint64_t>(seed);
      s.n = 2 + seed % (kFdMaxN - 1);
      s.edge_probability = 0.2 + 0.1 * (seed % 5);
      s.connected = true;
      return generated_case("benchmark/fd/s" + pad(seed, 4), s,
                            [](Case &c, const Graph &g, Eval &eval) {
                              const auto fd = fd_exact(g);
                              c.checks.push_back(holds("fd_defined", fd.has_value()));
                              if (fd) {
                                c.invariants["fd"] = fd->size;
                                c.checks.push_back(at_most(
                                    "fd", Rational(fd->size),
                                    Rational(g.order() - eval.alpha_reg(0))));
                              }
                            });
    });
  return {"benchmark", run_tasks(tasks)};
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"trees",   "forests",   "ktrees",
                                              "planar",  "reduction", "benchmark"};
  return names;
}

bool is_suite(const std::string &name) {
  const auto &names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string &name, const SuiteOptions &options) {
  if (name == "trees")
    return trees_suite(options);
  if (name == "forests")
    return forests_suite(options);
  if (name == "ktrees")
    return ktrees_suite(options);
  if (name == "planar")
    return planar_suite(options);
  if (name == "reduction")
    return reduction_suite(options);
  if (name == "benchmark")
    return benchmark_suite(options);
  throw std::invalid_argument("unknown suite: " + name);
}

} // namespace regind::harness
