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

#include "coopauction/dimacs.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace coopauction {
namespace {

constexpr std::string_view kNamePrefix = "name:";

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view token, int line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Instance ParseInstance(std::istream& in, const ParseOptions& options) {
  RawInstance raw;
  bool have_header = false;
  int header_line = 0;
  long long declared_arcs = 0;
  long long arcs = 0;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::vector<std::string_view> tok = Tokens(text);
    if (tok.empty()) continue;
    if (tok[0] == "c") {
      std::string_view rest = Trim(std::string_view(text).substr(text.find('c') + 1));
      if (rest.substr(0, kNamePrefix.size()) == kNamePrefix) {
        raw.name = std::string(Trim(rest.substr(kNamePrefix.size())));
      }
      continue;
    }
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line, "second problem line");
      if (tok.size() != 4 || tok[1] != "asn") {
        throw ParseError(line, "expected 'p asn <n> <m>'");
      }
      raw.n = ParseNumber<int>(tok[2], line, "person count");
      declared_arcs = ParseNumber<long long>(tok[3], line, "arc count");
      if (raw.n < 1) throw ParseError(line, "n must be at least 1");
      if (declared_arcs < 0) throw ParseError(line, "arc count must be non-negative");
      raw.adj.assign(raw.n, {});
      have_header = true;
      header_line = line;
      continue;
    }
    if (tok[0] == "a") {
      if (!have_header) throw ParseError(line, "arc before the problem line");
      if (tok.size() != 4) throw ParseError(line, "expected 'a <i> <j> <value>'");
      const int i = ParseNumber<int>(tok[1], line, "person");
      const int j = ParseNumber<int>(tok[2], line, "object");
      Value v = ParseNumber<Value>(tok[3], line, "value");
      if (i < 1 || i > raw.n) throw ParseError(line, "person out of range");
      if (j < 1 || j > raw.n) throw ParseError(line, "object out of range");
      if (options.negate) v = -v;
      raw.adj[i - 1].push_back({j - 1, v});
      ++arcs;
      continue;
    }
    throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!have_header) throw ParseError(line, "missing problem line");
  if (arcs != declared_arcs) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_arcs) +
                                      " arcs but " + std::to_string(arcs) + " were given");
  }
  return ValidateInstance(std::move(raw));
}

Instance ReadInstanceFile(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return ParseInstance(in, options);
}

void WriteInstance(std::ostream& out, const Instance& inst,
                   const std::vector<std::string>& comments) {
  if (!inst.name().empty()) out << "c name: " << inst.name() << '\n';
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p asn " << inst.size() << ' ' << inst.num_arcs() << '\n';
  for (PersonIndex i = 0; i < inst.size(); ++i) {
    for (const Arc& arc : inst.arcs(i)) {
      out << "a " << i + 1 << ' ' << arc.object + 1 << ' ' << arc.value << '\n';
    }
  }
}

}  // namespace coopauction
