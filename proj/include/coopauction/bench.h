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

#ifndef COOPAUCTION_BENCH_H_
#define COOPAUCTION_BENCH_H_

#include <optional>
#include <string>
#include <vector>

#include "coopauction/instance.h"
#include "coopauction/scaling.h"
#include "coopauction/solve_result.h"

namespace coopauction {

struct BenchCase {
  std::string series;  // cells of one series are compared against each other
  Instance instance;
  SolveConfig config;
};

struct BenchCell {
  std::string series;
  std::string instance;
  std::string algorithm;
  int n = 0;
  std::string status;
  std::string error;  // set when the solve threw
  Value primal = 0;
  std::optional<Value> gap;
  std::optional<Value> oracle;  // exact optimum for n <= 8
  Counters counters;
  double wall_ms = 0;
};

struct BenchReport {
  std::vector<BenchCell> cells;
};

// Price-war series, chain series and a few small random instances.
std::vector<BenchCase> DefaultBenchSuite();

// Runs every case, `threads` at a time. A failing case is recorded in its
// cell and the rest still run. Cells keep the order of `cases`.
BenchReport RunBench(const std::vector<BenchCase>& cases, int threads = 1);

std::string BenchReportToJson(const BenchReport& report);
std::string BenchReportToTable(const BenchReport& report);

}  // namespace coopauction

#endif  // COOPAUCTION_BENCH_H_
