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

// coopauction: solve, generate, benchmark and replay assignment problems.
//
// Exit codes: 0 ok, 1 internal error, 2 bad input or flags, 3 infeasible,
// 4 stalled or iteration limit, 5 verification or replay mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coopauction/assignment.h"
#include "coopauction/bench.h"
#include "coopauction/dimacs.h"
#include "coopauction/generators.h"
#include "coopauction/result_io.h"
#include "coopauction/scaling.h"
#include "coopauction/trace.h"
#include "json.hpp"

namespace coopauction {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNoProgress = 4;
constexpr int kExitVerify = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveFlags {
  std::string input = "-";
  std::string output;
  std::string algorithm = "combined";
  std::optional<Value> epsilon;
  std::string scaling = "off";
  Value theta = 4;
  Value eps0 = 0;
  std::string adaptive = "off";
  std::string initial_prices = "zero";
  std::string prices_file;
  std::string initial_assignment;
  std::string trace;
  bool verify = false;
  std::uint64_t seed = 0;
  std::int64_t max_iters = 0;
  bool minimize = false;
  bool feasibility_check = false;
  bool artificial_pairs = false;
  std::string person_order = "fifo";
  std::string removal_rule = "fifo";
};

struct GenFlags {
  std::string family = "random";
  int n = 8;
  Value range = 100;
  double density = 0.5;
  std::uint64_t seed = 1;
  std::string output;
};

struct BenchFlags {
  int threads = 1;
  std::string json;
};

struct ReplayFlags {
  std::string trace;
  std::string result;
};

bool OnOff(const std::string& value, const std::string& flag) {
  if (value == "on") return true;
  if (value == "off") return false;
  throw UsageError(flag + " must be on or off");
}

// "1:2,3:1" in 1-based indices.
std::vector<std::pair<PersonIndex, ObjectIndex>> ParsePairs(const std::string& text) {
  std::vector<std::pair<PersonIndex, ObjectIndex>> pairs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("bad pair '" + item + "'");
    try {
      pairs.emplace_back(std::stoi(item.substr(0, colon)) - 1,
                         std::stoi(item.substr(colon + 1)) - 1);
    } catch (const std::logic_error&) {
      throw UsageError("bad pair '" + item + "'");
    }
  }
  return pairs;
}

PriceVector ReadPrices(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open prices file " + path);
  PriceVector prices;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      prices.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw UsageError("bad price '" + token + "' in " + path);
    }
  }
  return prices;
}

Instance LoadInstance(const std::string& path, const ParseOptions& options) {
  if (path == "-") return ParseInstance(std::cin, options);
  return ReadInstanceFile(path, options);
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int ExitFor(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
    case SolveStatus::kComplete:
      return kExitOk;
    case SolveStatus::kInfeasible:
      return kExitInfeasible;
    case SolveStatus::kStalled:
    case SolveStatus::kIterationLimit:
      return kExitNoProgress;
  }
  return kExitInternal;
}

int RunSolve(const SolveFlags& f) {
  const std::optional<Algorithm> algorithm = ParseAlgorithm(f.algorithm);
  if (!algorithm) throw UsageError("unknown algorithm " + f.algorithm);
  SolveConfig cfg;
  cfg.algorithm = *algorithm;
  cfg.scaling = OnOff(f.scaling, "--scaling");
  cfg.adaptive = OnOff(f.adaptive, "--adaptive");
  cfg.theta = f.theta;
  cfg.eps0 = f.eps0;
  const Value default_eps = *algorithm == Algorithm::kConservative ? 0 : 1;
  cfg.eps = f.epsilon.value_or(default_eps);
  if (*algorithm == Algorithm::kConservative && cfg.eps != 0) {
    throw UsageError("the conservative auction runs at epsilon 0");
  }
  if (*algorithm == Algorithm::kAggressive && cfg.eps <= 0) {
    throw UsageError("the aggressive auction needs epsilon > 0");
  }
  if (cfg.eps < 0) throw UsageError("epsilon must be non-negative");
  if (cfg.scaling) cfg.eps_final = std::max<Value>(1, cfg.eps);
  cfg.max_iterations = f.max_iters;
  cfg.check_feasibility = f.feasibility_check;
  cfg.artificial_pairs = f.artificial_pairs;
  cfg.person_order = f.person_order == "lowest" ? PersonOrder::kLowestIndex
                                                : PersonOrder::kFifo;
  cfg.removal_rule = f.removal_rule == "lifo" ? RemovalRule::kLifo : RemovalRule::kFifo;
  if (f.initial_prices == "zero") {
    cfg.initial_prices = InitialPrices::kZero;
  } else if (f.initial_prices == "minvalue") {
    cfg.initial_prices = InitialPrices::kMinValue;
  } else if (f.initial_prices == "file") {
    if (f.prices_file.empty()) throw UsageError("--initial-prices file needs --prices-file");
    cfg.initial_prices = InitialPrices::kGiven;
    cfg.given_prices = ReadPrices(f.prices_file);
  } else {
    throw UsageError("--initial-prices must be zero, minvalue or file");
  }
  cfg.initial_assignment = ParsePairs(f.initial_assignment);

  ParseOptions parse;
  parse.negate = f.minimize;
  const Instance inst = LoadInstance(f.input, parse);

  std::unique_ptr<std::ofstream> trace_file;
  std::unique_ptr<JsonlTraceWriter> writer;
  Tracer tracer;
  if (!f.trace.empty()) {
    trace_file = std::make_unique<std::ofstream>(f.trace);
    if (!*trace_file) throw UsageError("cannot write " + f.trace);
    writer = std::make_unique<JsonlTraceWriter>(*trace_file);
    tracer = Tracer(writer.get());
    cfg.tracer = &tracer;
  }

  const SolveResult result = Solve(inst, cfg);
  const ResultMeta meta{inst.name(), f.algorithm, cfg.scaling, f.seed};
  WriteText(f.output, ResultToJson(result, meta) + "\n");

  if (f.verify) {
    const Instance work = cfg.artificial_pairs ? AddArtificialPairs(inst) : inst;
    const VerifyReport report = VerifySolution(work.Scaled(result.scale), result);
    for (const std::string& p : report.problems) std::cerr << "verify: " << p << "\n";
    if (!report.ok()) return kExitVerify;
  }
  return ExitFor(result.status);
}

int RunGen(const GenFlags& f) {
  const std::optional<Family> family = ParseFamily(f.family);
  if (!family) throw UsageError("unknown family " + f.family);
  GenSpec spec;
  spec.family = *family;
  spec.n = f.n;
  spec.range = f.range;
  spec.density = f.density;
  spec.seed = f.seed;
  const Instance inst = Generate(spec);
  std::ostringstream comment;
  comment << "gen family=" << f.family << " n=" << f.n << " C=" << f.range
          << " density=" << f.density << " seed=" << f.seed;
  std::ostringstream out;
  WriteInstance(out, inst, {comment.str()});
  WriteText(f.output, out.str());
  return kExitOk;
}

int RunBenchCommand(const BenchFlags& f) {
  const BenchReport report = RunBench(DefaultBenchSuite(), std::max(1, f.threads));
  std::cout << BenchReportToTable(report);
  if (!f.json.empty()) WriteText(f.json, BenchReportToJson(report) + "\n");
  return kExitOk;
}

int RunReplay(const ReplayFlags& f) {
  std::ifstream in(f.trace);
  if (!in) throw UsageError("cannot open trace " + f.trace);
  std::vector<TraceRecord> records;
  try {
    records = ReadTrace(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad trace: ") + e.what());
  }
  const ReplayedState state = ReplayTrace(records);
  nlohmann::ordered_json doc;
  doc["records"] = records.size();
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [i, j] : state.assignment.Pairs()) pairs.push_back({i + 1, j + 1});
  doc["assignment"] = pairs;
  doc["prices"] = state.prices;
  std::cout << doc.dump(2) << "\n";
  if (f.result.empty()) return kExitOk;

  std::ifstream rin(f.result);
  if (!rin) throw UsageError("cannot open result " + f.result);
  nlohmann::json result;
  try {
    result = nlohmann::json::parse(rin);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad result document: ") + e.what());
  }
  const bool same = result.value("prices", nlohmann::json()) == nlohmann::json(doc["prices"]) &&
                    result.value("assignment", nlohmann::json()) ==
                        nlohmann::json(doc["assignment"]);
  if (!same) {
    std::cerr << "replay: final state differs from " << f.result << "\n";
    return kExitVerify;
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Auction solvers for the linear assignment problem"};
  app.require_subcommand(1);
  const char* config_env = std::getenv("COOPAUCTION_CONFIG");
  app.set_config("--config", config_env != nullptr ? config_env : "",
                 "INI or TOML file with default flag values (env COOPAUCTION_CONFIG)");

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("input", solve.input, "Instance path, or - for stdin");
  solve_cmd->add_option("-o,--output", solve.output, "Result document path (default stdout)");
  solve_cmd->add_option("--algorithm", solve.algorithm,
                        "conservative|aggressive|cooperative|expanding|combined|reassign");
  solve_cmd->add_option("--epsilon", solve.epsilon,
                        "Epsilon, or final epsilon with scaling (default 1, 0 for conservative)");
  solve_cmd->add_option("--scaling", solve.scaling, "on|off");
  solve_cmd->add_option("--theta", solve.theta, "Epsilon reduction factor");
  solve_cmd->add_option("--eps0", solve.eps0, "First phase epsilon (0 picks a default)");
  solve_cmd->add_option("--adaptive", solve.adaptive, "Person-dependent epsilon: on|off");
  solve_cmd->add_option("--initial-prices", solve.initial_prices, "zero|minvalue|file");
  solve_cmd->add_option("--prices-file", solve.prices_file,
                        "Whitespace-separated start prices, in scaled units");
  solve_cmd->add_option("--initial-assignment", solve.initial_assignment,
                        "Start pairs, e.g. 1:1,2:2");
  solve_cmd->add_option("--trace", solve.trace, "Write a line-delimited trace here");
  solve_cmd->add_flag("--verify", solve.verify, "Check the result independently");
  solve_cmd->add_option("--seed", solve.seed, "Recorded in the result document");
  solve_cmd->add_option("--max-iters", solve.max_iters, "Iteration cap per phase");
  solve_cmd->add_flag("--minimize", solve.minimize, "Read values as costs");
  solve_cmd->add_flag("--feasibility-check", solve.feasibility_check,
                      "Run a matching check before solving");
  solve_cmd->add_flag("--artificial-pairs", solve.artificial_pairs,
                      "Pad with penalized arcs to certify infeasibility");
  solve_cmd->add_option("--person-order", solve.person_order, "fifo|lowest");
  solve_cmd->add_option("--removal-rule", solve.removal_rule, "fifo|lifo");

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family,
                      "three_by_three|four_by_four|chain|random|infeasible");
  gen_cmd->add_option("--n", gen.n, "Size");
  gen_cmd->add_option("--range", gen.range, "Value range C");
  gen_cmd->add_option("--density", gen.density, "Extra arc probability");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run the benchmark suite");
  bench_cmd->add_option("--threads", bench.threads, "Concurrent cells");
  bench_cmd->add_option("--json", bench.json, "Also write the report document here");

  ReplayFlags replay;
  CLI::App* replay_cmd = app.add_subcommand("replay", "Rebuild the final state from a trace");
  replay_cmd->add_option("trace", replay.trace, "Trace path")->required();
  replay_cmd->add_option("--result", replay.result, "Result document to compare against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*gen_cmd) return RunGen(gen);
    if (*bench_cmd) return RunBenchCommand(bench);
    if (*replay_cmd) return RunReplay(replay);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AssignmentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Bad start states and inconsistent configurations.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace coopauction

int main(int argc, char** argv) { return coopauction::Main(argc, argv); }
