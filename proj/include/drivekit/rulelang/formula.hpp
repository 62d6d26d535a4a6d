// rulelang/formula.hpp
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

#ifndef DRIVEKIT_RULELANG_FORMULA_HPP
#define DRIVEKIT_RULELANG_FORMULA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "drivekit/rulelang/schema.hpp"

namespace drivekit::rulelang {

// Complete truth assignment, one entry per schema predicate in schema order.
using Assignment = std::vector<uint8_t>;

struct Literal {
  size_t predicate = 0;
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

// And/or tree over signed literals. Negation only lives on the leaves:
// parenthesized negations are pushed down (De Morgan) at parse time.
// Same-kind children are flattened, so conj never directly nests conj.
class Expr {
 public:
  enum class Kind { leaf, conj, disj };

  static Expr leaf(Literal lit);
  static Expr conj(std::vector<Expr> children);
  static Expr disj(std::vector<Expr> children);

  Kind kind() const { return kind_; }
  const Literal& literal() const { return lit_; }
  const std::vector<Expr>& children() const { return children_; }

  bool evaluate(std::span<const uint8_t> assignment) const;

  // Flips the truth value, rewriting the tree in place (leaves toggle their
  // negation flag; conj and disj swap).
  void negate();

  // All predicate indices referenced, in first-occurrence order.
  void collect_predicates(std::vector<size_t>& out) const;

  std::string print(const PredicateSchema& schema) const;

  bool operator==(const Expr& other) const;

 private:
  Expr() = default;

  Kind kind_ = Kind::leaf;
  Literal lit_;
  std::vector<Expr> children_;
};

// One first-order rule over the single scenario constant. An empty
// antecedent makes the formula a hard fact on its consequent.
struct Formula {
  std::vector<Literal> antecedent;
  Expr consequent = Expr::leaf(Literal{});
  std::string source_text;

  // Potential phi_f(a): false only when the antecedent holds and the
  // consequent does not.
  bool evaluate(std::span<const uint8_t> assignment) const;

  std::vector<size_t> referenced_predicates() const;

  // Canonical surface form; re-parsing it yields a structurally identical
  // formula. Does not include a weight.
  std::string print(const PredicateSchema& schema) const;

  // Structural identity, ignoring source_text.
  bool same_structure(const Formula& other) const {
    return antecedent == other.antecedent && consequent == other.consequent;
  }
};

std::string print_literal(const Literal& lit, const PredicateSchema& schema);

}  // namespace drivekit::rulelang

#endif  // DRIVEKIT_RULELANG_FORMULA_HPP
