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

#ifndef COOPAUCTION_DIMACS_H_
#define COOPAUCTION_DIMACS_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "coopauction/instance.h"

namespace coopauction {

// Line-oriented instance format:
//   c <comment>          (a "c name: <label>" comment sets the name)
//   p asn <n> <m>
//   a <person> <object> <value>    (1-based, m lines)
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseOptions {
  bool negate = false;  // read a minimization problem as maximization
};

// Throws ParseError for malformed input and InstanceError for instances that
// parse but violate the instance invariants.
Instance ParseInstance(std::istream& in, const ParseOptions& options = {});
Instance ReadInstanceFile(const std::string& path, const ParseOptions& options = {});

// Canonical form: comments, header, then arcs sorted by person and object.
void WriteInstance(std::ostream& out, const Instance& inst,
                   const std::vector<std::string>& comments = {});

}  // namespace coopauction

#endif  // COOPAUCTION_DIMACS_H_
