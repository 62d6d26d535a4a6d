// rulelang/formula.cpp
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

#include "drivekit/rulelang/formula.hpp"

#include <algorithm>
#include <cassert>

namespace drivekit::rulelang {

Expr Expr::leaf(Literal lit) {
  Expr e;
  e.kind_ = Kind::leaf;
  e.lit_ = lit;
  return e;
}

namespace {

// Hoists same-kind children so the tree stays flat regardless of how the
// source was parenthesized; a single child collapses to itself.
std::vector<Expr> flatten(Expr::Kind kind, std::vector<Expr> children) {
  std::vector<Expr> flat;
  flat.reserve(children.size());
  for (Expr& child : children) {
    if (child.kind() == kind) {
      for (const Expr& grandchild : child.children()) flat.push_back(grandchild);
    } else {
      flat.push_back(std::move(child));
    }
  }
  return flat;
}

}  // namespace

Expr Expr::conj(std::vector<Expr> children) {
  assert(!children.empty());
  if (children.size() == 1) return std::move(children.front());
  Expr e;
  e.kind_ = Kind::conj;
  e.children_ = flatten(Kind::conj, std::move(children));
  return e;
}

Expr Expr::disj(std::vector<Expr> children) {
  assert(!children.empty());
  if (children.size() == 1) return std::move(children.front());
  Expr e;
  e.kind_ = Kind::disj;
  e.children_ = flatten(Kind::disj, std::move(children));
  return e;
}

bool Expr::evaluate(std::span<const uint8_t> assignment) const {
  switch (kind_) {
    case Kind::leaf: {
      const bool v = assignment[lit_.predicate] != 0;
      return lit_.negated ? !v : v;
    }
    case Kind::conj:
      for (const Expr& c : children_) {
        if (!c.evaluate(assignment)) return false;
      }
      return true;
    case Kind::disj:
      for (const Expr& c : children_) {
        if (c.evaluate(assignment)) return true;
      }
      return false;
  }
  return false;
}

void Expr::negate() {
  switch (kind_) {
    case Kind::leaf:
      lit_.negated = !lit_.negated;
      return;
    case Kind::conj:
      kind_ = Kind::disj;
      break;
    case Kind::disj:
      kind_ = Kind::conj;
      break;
  }
  for (Expr& c : children_) c.negate();
}

void Expr::collect_predicates(std::vector<size_t>& out) const {
  if (kind_ == Kind::leaf) {
    if (std::find(out.begin(), out.end(), lit_.predicate) == out.end()) {
      out.push_back(lit_.predicate);
    }
    return;
  }
  for (const Expr& c : children_) c.collect_predicates(out);
}

std::string print_literal(const Literal& lit, const PredicateSchema& schema) {
  std::string out;
  if (lit.negated) out += '!';
  out += schema.name(lit.predicate);
  out += "(x)";
  return out;
}

std::string Expr::print(const PredicateSchema& schema) const {
  switch (kind_) {
    case Kind::leaf:
      return print_literal(lit_, schema);
    case Kind::conj: {
      std::string out;
      for (size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " & ";
        // A disj child binds looser than & and needs parens.
        if (children_[i].kind() == Kind::disj) {
          out += '(' + children_[i].print(schema) + ')';
        } else {
          out += children_[i].print(schema);
        }
      }
      return out;
    }
    case Kind::disj: {
      std::string out;
      for (size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " | ";
        out += children_[i].print(schema);
      }
      return out;
    }
  }
  return {};
}

bool Expr::operator==(const Expr& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::leaf) return lit_ == other.lit_;
  return children_ == other.children_;
}

bool Formula::evaluate(std::span<const uint8_t> assignment) const {
  for (const Literal& lit : antecedent) {
    const bool v = assignment[lit.predicate] != 0;
    if ((lit.negated ? !v : v) == false) return true;  // vacuous
  }
  return consequent.evaluate(assignment);
}

std::vector<size_t> Formula::referenced_predicates() const {
  std::vector<size_t> out;
  for (const Literal& lit : antecedent) {
    if (std::find(out.begin(), out.end(), lit.predicate) == out.end()) {
      out.push_back(lit.predicate);
    }
  }
  consequent.collect_predicates(out);
  return out;
}

std::string Formula::print(const PredicateSchema& schema) const {
  std::string out;
  if (!antecedent.empty()) {
    for (size_t i = 0; i < antecedent.size(); ++i) {
      if (i) out += " & ";
      out += print_literal(antecedent[i], schema);
    }
    out += " => ";
  }
  out += consequent.print(schema);
  return out;
}

}  // namespace drivekit::rulelang
