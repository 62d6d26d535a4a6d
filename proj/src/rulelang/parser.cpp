// rulelang/parser.cpp
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

#include "drivekit/rulelang/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "drivekit/util/errors.hpp"

namespace drivekit::rulelang {

namespace {

enum class Tok { number, name, bang, amp, pipe, lparen, rparen, implies, end };

struct Token {
  Tok type;
  std::string text;
};

class Lexer {
 public:
  Lexer(std::string_view src, int line_no) : src_(src), line_(line_no) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_);
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) {
      current_ = {Tok::end, ""};
      return;
    }
    const char c = src_[pos_];
    if (c == '!') { current_ = {Tok::bang, "!"}; ++pos_; return; }
    if (c == '&') { current_ = {Tok::amp, "&"}; ++pos_; return; }
    if (c == '|') { current_ = {Tok::pipe, "|"}; ++pos_; return; }
    if (c == '(') { current_ = {Tok::lparen, "("}; ++pos_; return; }
    if (c == ')') { current_ = {Tok::rparen, ")"}; ++pos_; return; }
    if (c == '=') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        current_ = {Tok::implies, "=>"};
        pos_ += 2;
        return;
      }
      fail("stray '='; expected '=>'");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      size_t start = pos_;
      ++pos_;
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E' ||
              ((src_[pos_] == '+' || src_[pos_] == '-') &&
               (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')))) {
        ++pos_;
      }
      current_ = {Tok::number, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      current_ = {Tok::name, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  size_t pos_ = 0;
  Token current_;
  int line_ = 0;
};

class RuleParser {
 public:
  RuleParser(std::string_view src, const PredicateSchema& schema, int line_no)
      : lex_(src, line_no), schema_(schema), line_(line_no) {}

  ParsedRule parse_line(std::string source_text) {
    ParsedRule rule;
    if (lex_.peek().type == Tok::number) {
      const std::string text = lex_.take().text;
      double w = 0.0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        lex_.fail("bad weight '" + text + "'");
      }
      rule.weight = w;
    }
    Expr lhs = parse_expr();
    if (lex_.peek().type == Tok::implies) {
      lex_.take();
      rule.formula.antecedent = to_conjunction(lhs);
      rule.formula.consequent = parse_expr();
    } else {
      rule.formula.consequent = std::move(lhs);
    }
    if (lex_.peek().type != Tok::end) {
      lex_.fail("trailing input after formula: '" + lex_.peek().text + "'");
    }
    rule.formula.source_text = std::move(source_text);
    return rule;
  }

 private:
  // The antecedent admits only a conjunction of literals.
  std::vector<Literal> to_conjunction(const Expr& e) {
    std::vector<Literal> lits;
    if (e.kind() == Expr::Kind::leaf) {
      lits.push_back(e.literal());
      return lits;
    }
    if (e.kind() != Expr::Kind::conj) {
      lex_.fail("antecedent must be a conjunction of literals");
    }
    for (const Expr& c : e.children()) {
      if (c.kind() != Expr::Kind::leaf) {
        lex_.fail("antecedent must be a conjunction of literals");
      }
      lits.push_back(c.literal());
    }
    return lits;
  }

  Expr parse_expr() {
    std::vector<Expr> terms;
    terms.push_back(parse_andexpr());
    while (lex_.peek().type == Tok::pipe) {
      lex_.take();
      terms.push_back(parse_andexpr());
    }
    return Expr::disj(std::move(terms));
  }

  Expr parse_andexpr() {
    std::vector<Expr> factors;
    factors.push_back(parse_literal());
    while (lex_.peek().type == Tok::amp) {
      lex_.take();
      factors.push_back(parse_literal());
    }
    return Expr::conj(std::move(factors));
  }

  Expr parse_literal() {
    bool negated = false;
    if (lex_.peek().type == Tok::bang) {
      lex_.take();
      negated = true;
    }
    Expr atom = parse_atom();
    if (negated) atom.negate();
    return atom;
  }

  Expr parse_atom() {
    if (lex_.peek().type == Tok::lparen) {
      lex_.take();
      Expr inner = parse_expr();
      if (lex_.peek().type != Tok::rparen) lex_.fail("expected ')'");
      lex_.take();
      return inner;
    }
    if (lex_.peek().type != Tok::name) {
      lex_.fail("expected predicate, got '" + lex_.peek().text + "'");
    }
    const std::string name = lex_.take().text;
    auto idx = schema_.index_of(name);
    if (!idx) lex_.fail("predicate '" + name + "' not in schema");
    if (lex_.peek().type != Tok::lparen) lex_.fail("expected '(x)' after predicate");
    lex_.take();
    if (lex_.peek().type != Tok::name || lex_.peek().text != "x") {
      lex_.fail("predicates take the single scenario variable x");
    }
    lex_.take();
    if (lex_.peek().type != Tok::rparen) lex_.fail("expected ')'");
    lex_.take();
    return Expr::leaf(Literal{*idx, false});
  }

  Lexer lex_;
  const PredicateSchema& schema_;
  int line_;
};

std::string strip(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

ParsedRule parse_rule_line(const std::string& line, const PredicateSchema& schema,
                           int line_no) {
  RuleParser parser(line, schema, line_no);
  return parser.parse_line(line);
}

std::vector<ParsedRule> parse_rules(const std::string& text,
                                    const PredicateSchema& schema) {
  std::vector<ParsedRule> rules;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = strip(raw);
    if (line.empty()) continue;
    rules.push_back(parse_rule_line(line, schema, line_no));
  }
  return rules;
}

std::vector<ParsedRule> load_rules(const std::string& path,
                                   const PredicateSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open rule file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str(), schema);
}

}  // namespace drivekit::rulelang
