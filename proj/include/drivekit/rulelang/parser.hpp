// rulelang/parser.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRIVEKIT_RULELANG_PARSER_HPP
#define DRIVEKIT_RULELANG_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "drivekit/rulelang/formula.hpp"
#include "drivekit/rulelang/schema.hpp"

namespace drivekit::rulelang {

struct ParsedRule {
  std::optional<double> weight;  // absent -> weight to be learned
  Formula formula;
};

// Rule file grammar (one rule per nonempty line, '#' comments):
//
//   line    := [weight] clause
//   weight  := decimal number
//   clause  := conj "=>" expr | expr
//   conj    := literal ("&" literal)*
//   expr    := andexpr ("|" andexpr)*
//   andexpr := literal ("&" literal)*
//   literal := "!"? atom
//   atom    := NAME "(" "x" ")" | "(" expr ")"
//
// AND binds tighter than OR; parentheses override. Errors carry the
// 1-based line number.
std::vector<ParsedRule> parse_rules(const std::string& text,
                                    const PredicateSchema& schema);

std::vector<ParsedRule> load_rules(const std::string& path,
                                   const PredicateSchema& schema);

// Parses a single rule line (no comments). Used by tests and the model file
// loader, which stores one rule per JSON entry.
ParsedRule parse_rule_line(const std::string& line,
                           const PredicateSchema& schema, int line_no = 0);

}  // namespace drivekit::rulelang

#endif  // DRIVEKIT_RULELANG_PARSER_HPP
