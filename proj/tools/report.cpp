#include "harness.hpp"

#include "regind/regular_independence.hpp"
#include "regind/solvers.hpp"

#include <cstdlib>
#include <sstream>

namespace regind::harness {

json rational_json(const Rational &r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}};
}

json provenance_json(const Provenance &p) {
  json out;
  out["family"] = p.family;
  out["params"] = p.params;
  out["seed"] = p.seed;
  out["expected"] = json::array();
  for (const auto &e : p.expected)
    out["expected"].push_back({{"invariant", e.invariant},
                               {"k", e.k},
                               {"value", rational_json(e.value)}});
  json counts = json::object();
  for (auto [degree, count] : p.degree_counts)
    counts[std::to_string(degree)] = count;
  out["degree_counts"] = counts;
  return out;
}

Check at_least(std::string name, const Rational &invariant,
               const Rational &bound) {
  return {std::move(name), invariant, bound, Relation::ge};
}

Check equals(std::string name, const Rational &invariant,
             const Rational &expected) {
  return {std::move(name), invariant, expected, Relation::eq};
}

Check holds(std::string name, bool ok) {
  return {std::move(name), Rational(ok ? 1 : 0), Rational(1), Relation::eq};
}

Check at_most(std::string name, const Rational &invariant,
              const Rational &upper) {
  return {std::move(name), invariant, upper, Relation::le};
}

int SuiteReport::failed() const {
  return static_cast<int>(std::count_if(
      cases.begin(), cases.end(), [](const Case &c) { return !c.pass(); }));
}

int SuiteReport::sharp() const {
  int count = 0;
  for (const auto &c : cases)
    for (const auto &check : c.checks)
      count += check.relation != Relation::eq && check.sharp();
  return count;
}

std::optional<Rational> SuiteReport::min_slack() const {
  std::optional<Rational> best;
  for (const auto &c : cases)
    for (const auto &check : c.checks)
      if (!best || check.slack() < *best)
        best = check.slack();
  return best;
}

namespace {

const char *relation_name(Relation r) {
  switch (r) {
  case Relation::ge:
    return ">=";
  case Relation::le:
    return "<=";
  default:
    return "==";
  }
}

json case_json(const Case &c) {
  json checks = json::array();
  for (const auto &check : c.checks)
    checks.push_back({{"name", check.name},
                      {"relation", relation_name(check.relation)},
                      {"invariant", rational_json(check.invariant)},
                      {"bound", rational_json(check.bound)},
                      {"slack", rational_json(check.slack())},
                      {"pass", check.pass()},
                      {"sharp", check.sharp()}});
  return {{"id", c.id},
          {"provenance", c.provenance},
          {"invariants", c.invariants},
          {"checks", checks},
          {"pass", c.pass()}};
}

std::vector<const Case *> failures_first(const std::vector<Case> &cases) {
  std::vector<const Case *> order;
  for (const auto &c : cases)
    if (!c.pass())
      order.push_back(&c);
  for (const auto &c : cases)
    if (c.pass())
      order.push_back(&c);
  return order;
}

} // namespace

json SuiteReport::to_json() const {
  json out;
  out["suite"] = suite;
  out["cases"] = json::array();
  for (const Case *c : failures_first(cases))
    out["cases"].push_back(case_json(*c));
  int checks = 0;
  for (const auto &c : cases)
    checks += static_cast<int>(c.checks.size());
  out["summary"] = {{"cases", cases.size()},
                    {"checks", checks},
                    {"passed", static_cast<int>(cases.size()) - failed()},
                    {"failed", failed()},
                    {"sharp", sharp()}};
  if (auto slack = min_slack())
    out["summary"]["min_slack"] = rational_json(*slack);
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  for (const Case *c : failures_first(cases)) {
    if (c->pass())
      break;
    out << "FAIL " << c->id << "\n";
    for (const auto &check : c->checks)
      if (!check.pass())
        out << "  " << check.name << ": " << to_string(check.invariant)
            << " " << relation_name(check.relation) << " "
            << to_string(check.bound) << " fails"
            << "\n";
  }
  out << "suite " << suite << ": " << cases.size() << " cases, " << failed()
      << " failed, " << sharp() << " sharp checks";
  if (auto slack = min_slack())
    out << ", min slack " << to_string(*slack);
  out << "\n";
  return out.str();
}

unsigned worker_count() {
  if (const char *env = std::getenv("REGIND_THREADS")) {
    int v = std::atoi(env);
    if (v > 0)
      return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

json compute_report(const Graph &g, const std::vector<int> &ks) {
  json out;
  out["n"] = g.order();
  out["m"] = g.size();
  out["min_degree"] = g.min_degree();
  out["max_degree"] = g.max_degree();
  out["rep"] = rep(g);
  json counts = json::object();
  for (const auto &[degree, members] : degree_classes(g).classes)
    counts[std::to_string(degree)] = members.size();
  out["degree_counts"] = counts;
  out["results"] = json::array();
  for (int k : ks) {
    auto result = alpha_k_reg(g, k);
    json per = json::object();
    for (const auto &[degree, alpha] : result.per_degree)
      per[std::to_string(degree)] = alpha.size;
    out["results"].push_back({{"k", k},
                              {"alpha_kj", per},
                              {"alpha_k_reg", result.best_size},
                              {"degree", result.best_degree},
                              {"witness", result.best.vertices}});
  }
  if (g.order() > 0 && g.order() <= 16 && g.min_degree() >= 1) {
    auto fd = fd_exact(g);
    out["fd"] = {{"size", fd->size}, {"set", fd->set}};
  }
  return out;
}

std::string compute_text(const json &report) {
  std::ostringstream out;
  out << "n " << report["n"] << "  m " << report["m"] << "  delta "
      << report["min_degree"] << "  Delta " << report["max_degree"] << "  rep "
      << report["rep"] << "\n";
  out << "n_j:";
  for (auto &[degree, count] : report["degree_counts"].items())
    out << " " << degree << ":" << count;
  out << "\n";
  for (const auto &r : report["results"]) {
    out << "k=" << r["k"] << "  alpha_k_reg " << r["alpha_k_reg"]
        << " (degree " << r["degree"] << ")  alpha_kj:";
    for (auto &[degree, size] : r["alpha_kj"].items())
      out << " " << degree << ":" << size;
    out << "\n";
  }
  if (report.contains("fd"))
    out << "fd " << report["fd"]["size"] << "\n";
  return out.str();
}

} // namespace regind::harness
