// Copyright 2026 The coopauction Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coopauction/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "coopauction/generators.h"
#include "coopauction/oracle.h"
#include "json.hpp"

namespace coopauction {
namespace {

SolveConfig Unscaled(Algorithm algorithm, Value eps) {
  SolveConfig cfg;
  cfg.algorithm = algorithm;
  cfg.scaling = false;
  cfg.eps = eps;
  return cfg;
}

BenchCell RunCase(const BenchCase& c) {
  BenchCell cell;
  cell.series = c.series;
  cell.instance = c.instance.name();
  cell.algorithm = std::string(AlgorithmName(c.config.algorithm));
  cell.n = c.instance.size();
  if (cell.n <= 8) {
    if (const auto opt = ExactOracle(c.instance)) cell.oracle = opt->value;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    const SolveResult r = Solve(c.instance, c.config);
    cell.status = std::string(SolveStatusName(r.status));
    cell.primal = r.primal_value;
    if (r.assignment.complete()) cell.gap = r.dual_cost - r.primal_value * r.scale;
    cell.counters = r.counters;
  } catch (const std::exception& e) {
    cell.status = "Error";
    cell.error = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  cell.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return cell;
}

}  // namespace

std::vector<BenchCase> DefaultBenchSuite() {
  std::vector<BenchCase> cases;
  for (const Value range : {100, 1000, 10000}) {
    const Instance inst = GenThreeByThree(range);
    for (const Algorithm a : {Algorithm::kAggressive, Algorithm::kCooperative,
                              Algorithm::kExpanding, Algorithm::kCombined}) {
      SolveConfig cfg = Unscaled(a, 1);
      cfg.initial_assignment = {{0, 0}, {1, 1}};
      cases.push_back({"price_war", inst, cfg});
    }
  }
  for (const int n : {50, 100, 200}) {
    const Instance inst = GenChain(n);
    for (const Algorithm a : {Algorithm::kExpanding, Algorithm::kCooperative}) {
      SolveConfig cfg = Unscaled(a, 0);
      cfg.initial_assignment = ChainStart(n);
      cases.push_back({"chain", inst, cfg});
    }
  }
  for (const std::uint64_t seed : {1, 2, 3}) {
    const Instance inst = GenRandom(8, 1000, 0.5, seed);
    for (const Algorithm a : {Algorithm::kAggressive, Algorithm::kCooperative,
                              Algorithm::kExpanding, Algorithm::kCombined,
                              Algorithm::kReassign}) {
      SolveConfig cfg;
      cfg.algorithm = a;
      cases.push_back({"random_small", inst, cfg});
    }
  }
  return cases;
}

BenchReport RunBench(const std::vector<BenchCase>& cases, int threads) {
  BenchReport report;
  report.cells.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      report.cells[k] = RunCase(cases[k]);
    }
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return report;
}

std::string BenchReportToJson(const BenchReport& report) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const BenchCell& c : report.cells) {
    nlohmann::ordered_json cell;
    cell["series"] = c.series;
    cell["instance"] = c.instance;
    cell["algorithm"] = c.algorithm;
    cell["n"] = c.n;
    cell["status"] = c.status;
    if (!c.error.empty()) cell["error"] = c.error;
    cell["primal"] = c.primal;
    cell["gap"] = c.gap ? nlohmann::ordered_json(*c.gap) : nlohmann::ordered_json();
    cell["oracle"] = c.oracle ? nlohmann::ordered_json(*c.oracle) : nlohmann::ordered_json();
    cell["iterations"] = c.counters.iterations;
    cell["bids"] = c.counters.bids;
    cell["price_rises"] = c.counters.price_rises;
    cell["node_visits"] = c.counters.node_visits;
    cell["expansions"] = c.counters.expansions;
    cell["wall_ms"] = c.wall_ms;
    cells.push_back(cell);
  }
  nlohmann::ordered_json doc;
  doc["schema"] = "coopauction.bench/1";
  doc["cells"] = cells;
  return doc.dump(2);
}

std::string BenchReportToTable(const BenchReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-13s %-24s %-13s %-11s %12s %10s %10s %12s %10s\n",
                "series", "instance", "algorithm", "status", "primal", "iters",
                "rises", "node_visits", "ms");
  out << line;
  for (const BenchCell& c : report.cells) {
    std::snprintf(line, sizeof line,
                  "%-13s %-24s %-13s %-11s %12lld %10lld %10lld %12lld %10.2f\n",
                  c.series.c_str(), c.instance.c_str(), c.algorithm.c_str(),
                  c.status.c_str(), static_cast<long long>(c.primal),
                  static_cast<long long>(c.counters.iterations),
                  static_cast<long long>(c.counters.price_rises),
                  static_cast<long long>(c.counters.node_visits), c.wall_ms);
    out << line;
  }
  return out.str();
}

}  // namespace coopauction
