#include "harness.hpp"

#include "regind/reduction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace regind;
using namespace regind::harness;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Degree classes above this size may take a while in the exact solver.
constexpr std::size_t kScaleWarning = 80;

void emit(const std::string &text, const std::string &out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f)
    throw std::runtime_error("cannot write " + out);
  f << text;
}

int cmd_compute(const std::string &input, std::vector<int> ks, bool as_json,
                const std::string &out) {
  const Graph g = read_edge_list_file(input);
  if (ks.empty())
    ks = {0};
  for (const auto &[j, members] : degree_classes(g).classes)
    if (members.size() > kScaleWarning)
      std::cerr << "warning: degree class " << j << " has " << members.size()
                << " vertices; exact search may be slow\n";
  const json report = compute_report(g, ks);
  emit(as_json ? report.dump(2) + "\n" : compute_text(report), out);
  return 0;
}

int cmd_tables(const std::vector<int> &which, bool as_json, const std::string &out) {
  std::vector<TableRow> rows;
  for (int t : which.empty() ? std::vector<int>{1, 2, 3} : which) {
    auto part = table_rows(t);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  emit(as_json ? tables_json(rows).dump(2) + "\n" : tables_text(rows), out);
  return tables_pass(rows) ? 0 : kExitFail;
}

int cmd_verify(const std::vector<std::string> &suites, const SuiteOptions &options,
               bool as_json, const std::string &out) {
  bool pass = true;
  json docs = json::array();
  std::string text;
  for (const auto &name : suites) {
    const auto report = run_suite(name, options);
    pass = pass && report.pass();
    if (as_json)
      docs.push_back(report.to_json());
    else
      text += report.to_text();
  }
  if (as_json)
    emit((docs.size() == 1 ? docs[0] : docs).dump(2) + "\n", out);
  else
    emit(text, out);
  return pass ? 0 : kExitFail;
}

int cmd_gen(const GenSpec &spec, const std::string &out) {
  const auto generated = gen(spec);
  const std::string provenance = provenance_json(generated.provenance).dump(2) + "\n";
  if (out.empty()) {
    std::cout << write_edge_list(generated.graph);
    std::cerr << provenance;
    return 0;
  }
  write_edge_list_file(generated.graph, out);
  emit(provenance, out + ".json");
  return 0;
}

int cmd_reduce(const std::string &input, int k, bool as_json, const std::string &out) {
  const Graph g = read_edge_list_file(input);
  const auto map = blowup(g, k);
  const auto claims = verify_claims(g, k);
  if (claims.above_recommended_size)
    std::cerr << "warning: (k+1)n = " << (k + 1) * g.order()
              << " exceeds the recommended 30 for exact solving\n";
  if (!out.empty()) {
    write_edge_list_file(map.host, out);
    emit(write_origin_table(map), out + ".origin");
  }
  json report = {{"k", k},
                 {"n", g.order()},
                 {"host_n", map.host.order()},
                 {"host_m", map.host.size()},
                 {"alpha_g", claims.alpha_g},
                 {"alpha_h", claims.alpha_h},
                 {"alpha_k_h", claims.alpha_k_h},
                 {"claim1", claims.claim1},
                 {"claim2", claims.claim2},
                 {"lifted_witness", claims.lifted_witness}};
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "H: " << map.host.order() << " vertices, " << map.host.size()
              << " edges\n"
              << "alpha(G) " << claims.alpha_g << "  alpha(H) " << claims.alpha_h
              << "  alpha_" << k << "(H) " << claims.alpha_k_h << "\n"
              << "claim1 " << (claims.claim1 ? "holds" : "FAILS") << ", claim2 "
              << (claims.claim2 ? "holds" : "FAILS") << ", lifted witness "
              << (claims.lifted_witness ? "valid" : "INVALID") << "\n";
  }
  return claims.ok() ? 0 : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"regular k-independence toolkit"};
  app.require_subcommand(1);

  std::string input, out, family = "random-tree";
  std::vector<int> ks;
  bool as_json = false;
  GenSpec spec;
  int seeds = 0, max_n = 0;

  auto *compute = app.add_subcommand("compute", "invariants of an edge-list graph");
  compute->add_option("--input", input, "edge list file")->required();
  compute->add_option("--k", ks, "defect bounds (repeatable)")->delimiter(',');
  compute->add_option("--out", out, "write the report here");
  compute->add_flag("--json", as_json);

  std::vector<int> which;
  auto *tables = app.add_subcommand("tables", "reproduce the bound tables");
  tables->add_option("which", which, "1, 2 or 3 (default: all)")->check(CLI::Range(1, 3));
  tables->add_option("--out", out);
  tables->add_flag("--json", as_json);

  std::vector<std::string> suites;
  auto *verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suites, "suite names or 'all'")->required();
  verify->add_option("--k", ks)->delimiter(',');
  verify->add_option("--max-n", max_n);
  verify->add_option("--seeds", seeds);
  verify->add_option("--out", out);
  verify->add_flag("--json", as_json);

  auto *gen_cmd = app.add_subcommand("gen", "generate a graph family member");
  gen_cmd->add_option("--family", family)->required();
  gen_cmd->add_option("--n", spec.n);
  gen_cmd->add_option("--p", spec.p);
  gen_cmd->add_option("--q", spec.q);
  gen_cmd->add_option("--k", spec.k);
  gen_cmd->add_option("--seed", spec.seed);
  gen_cmd->add_option("--isolated-vertices", spec.isolated_vertices);
  gen_cmd->add_option("--isolated-edges", spec.isolated_edges);
  gen_cmd->add_option("--edge-probability", spec.edge_probability);
  gen_cmd->add_flag("--connected", spec.connected);
  gen_cmd->add_option("--out", out, "edge list path; provenance goes to <out>.json");

  int reduce_k = 1;
  auto *reduce = app.add_subcommand("reduce", "clique blowup and its claims");
  reduce->add_option("--input", input)->required();
  reduce->add_option("--k", reduce_k)->check(CLI::NonNegativeNumber);
  reduce->add_option("--out", out, "host edge list; origin table goes to <out>.origin");
  reduce->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute)
      return cmd_compute(input, ks, as_json, out);
    if (*tables)
      return cmd_tables(which, as_json, out);
    if (*verify) {
      if (suites.size() == 1 && suites[0] == "all")
        suites = suite_names();
      for (const auto &s : suites)
        if (!is_suite(s)) {
          std::cerr << "unknown suite: " << s << "\n";
          return kExitUsage;
        }
      SuiteOptions options;
      options.ks = ks;
      if (max_n > 0)
        options.max_n = max_n;
      if (seeds > 0)
        options.seeds = seeds;
      return cmd_verify(suites, options, as_json, out);
    }
    if (*gen_cmd) {
      auto f = parse_family(family);
      if (!f) {
        std::cerr << "unknown family: " << family << "\n";
        return kExitUsage;
      }
      spec.family = *f;
      return cmd_gen(spec, out);
    }
    if (*reduce)
      return cmd_reduce(input, reduce_k, as_json, out);
  } catch (const ParseError &e) {
    std::cerr << input << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
