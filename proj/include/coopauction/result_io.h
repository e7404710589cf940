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

#ifndef COOPAUCTION_RESULT_IO_H_
#define COOPAUCTION_RESULT_IO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "coopauction/instance.h"
#include "coopauction/solve_result.h"

namespace coopauction {

inline constexpr char kResultSchema[] = "coopauction.result/1";

struct ResultMeta {
  std::string instance_name;
  std::string algorithm;
  bool scaling = false;
  std::uint64_t seed = 0;
};

// JSON result document. Key order is fixed and nothing time-dependent is
// written, so equal runs give byte-identical documents.
std::string ResultToJson(const SolveResult& result, const ResultMeta& meta,
                         int indent = 2);

struct VerifyReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Independent check of a result against the instance it was solved on (in
// the solver's scaled units): assignment validity, eps-CS at epsilon_final,
// and, when complete, 0 <= gap <= n * epsilon_final.
VerifyReport VerifySolution(const Instance& scaled, const SolveResult& result);

}  // namespace coopauction

#endif  // COOPAUCTION_RESULT_IO_H_
