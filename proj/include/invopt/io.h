// Copyright 2026 The invopt Authors
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

#ifndef INVOPT_IO_H_
#define INVOPT_IO_H_

#include <string>
#include <string_view>

#include "invopt/instance.h"
#include "invopt/report.h"

namespace invopt {

// Instance documents are UTF-8 JSON:
//
//   {
//     "elements":  ["a", "b"],
//     "objective": "hamming" | "linf",
//     "family":    {"kind": "explicit", "sets": [["a"], ["b"]]}
//                | {"kind": "spanning_tree", "edges": [[u, v, "a"], ...]}
//                | {"kind": "dag_path", "source": s, "target": t,
//                   "arcs": [[u, v, "a"], ...]}
//                | {"kind": "uniform_matroid", "rank": r},
//     "star":      ["a"],
//     "costs":     [{"a": "3", "b": "1"}],
//     "weights":   {"a": "1", "b": "1/2"},
//     "lower":     {"b": "-1/2"},
//     "upper":     {"a": "+inf"}
//   }
//
// Rationals are strings ("-3", "5/2", "-inf", "+inf"); plain JSON integers
// are accepted too. Missing bounds default to -inf / +inf and a missing
// objective to "linf". Graph families may carry "vertices": [...] to fix the
// vertex numbering; serialization always writes it.

// Parses and validates. Throws Error (kMalformedDocument for syntax or
// schema problems, otherwise the ValidateInstance codes).
Instance LoadInstance(std::string_view document);
Instance LoadInstanceFile(const std::string& path);

// Canonical document; LoadInstance(SerializeInstance(x)) == x.
std::string SerializeInstance(const Instance& instance);

// {"status", "objective_value", "deviation", "iterations", "oracle_calls",
//  "trace"?} in that order. Byte-identical for identical reports.
std::string SerializeReport(const Instance& instance, const SolveReport& report,
                            bool include_trace);

}  // namespace invopt

#endif  // INVOPT_IO_H_
