#pragma once

#include "regind/generators.hpp"
#include "regind/graph.hpp"
#include "regind/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace regind::harness {

using nlohmann::json;

json rational_json(const Rational &r);
json provenance_json(const Provenance &p);

enum class Relation { ge, le, eq };

/// One invariant-versus-bound comparison. Slack is measured in the direction
/// of the relation, so a passing inequality always has slack >= 0.
struct Check {
  std::string name;
  Rational invariant;
  Rational bound;
  Relation relation = Relation::ge;

  bool pass() const {
    switch (relation) {
    case Relation::ge:
      return invariant >= bound;
    case Relation::le:
      return invariant <= bound;
    default:
      return invariant == bound;
    }
  }
  bool sharp() const { return invariant == bound; }
  Rational slack() const {
    return relation == Relation::le ? bound - invariant : invariant - bound;
  }
};

Check at_least(std::string name, const Rational &invariant, const Rational &bound);
Check equals(std::string name, const Rational &invariant, const Rational &expected);
/// A structural predicate recorded as 1 == 1 (or 0 == 1 on failure).
Check holds(std::string name, bool ok);
Check at_most(std::string name, const Rational &invariant, const Rational &upper);

struct Case {
  std::string id;
  json provenance = json::object();
  json invariants = json::object();
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check &c) { return c.pass(); });
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<Case> cases;

  int failed() const;
  int sharp() const;
  std::optional<Rational> min_slack() const;
  bool pass() const { return failed() == 0; }

  /// Failures first, then the remaining cases in id order.
  json to_json() const;
  std::string to_text() const;
};

struct SuiteOptions {
  std::optional<int> max_n;
  std::optional<int> seeds;
  std::vector<int> ks;
};

const std::vector<std::string> &suite_names();
bool is_suite(const std::string &name);
SuiteReport run_suite(const std::string &name, const SuiteOptions &options);

/// Worker count: REGIND_THREADS when set and positive, else the hardware
/// concurrency.
unsigned worker_count();

/// Evaluates fn(0..count-1) on worker threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)> &fn) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; !failed && (i = next++) < count;) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true))
          error = std::current_exception();
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(count);
  for (auto &s : slots)
    out.push_back(std::move(*s));
  return out;
}

/// n, m, degrees, rep, per-degree alpha_{k,j} and alpha_{k-reg} for each k,
/// and fd when the graph has no isolated vertex and n <= 16.
json compute_report(const Graph &g, const std::vector<int> &ks);
std::string compute_text(const json &report);

enum class CellCheck { equal, at_least, report };

/// One cell of a reproduced table: engine value next to the published one.
struct TableCell {
  std::string column; // "benchmark", "middle", "maximal", "bound"
  Rational engine_coefficient;
  Rational engine_additive;
  int r_used = 0; // 0 for closed-form cells
  Rational published_coefficient;
  Rational published_additive;
  CellCheck check = CellCheck::equal;
  /// n at which at-least cells are compared.
  std::int64_t compare_at = 1000;

  bool exact_match() const {
    return engine_coefficient == published_coefficient &&
           engine_additive == published_additive;
  }
  bool pass() const;
};

struct TableRow {
  int table = 0;
  std::string family;
  int delta = 0;
  int k = 0;
  int family_param = 0;
  std::vector<TableCell> cells;
};

std::vector<TableRow> table_rows(int which);
json tables_json(const std::vector<TableRow> &rows);
std::string tables_text(const std::vector<TableRow> &rows);
bool tables_pass(const std::vector<TableRow> &rows);

} // namespace regind::harness
