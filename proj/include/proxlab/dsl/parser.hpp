#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "proxlab/dsl/ast.hpp"
#include "proxlab/dsl/lexer.hpp"

namespace proxlab::dsl {

/// Recursive-descent parser. Statements are one per line:
///
///   universe ID = finite(INT) | integers [with_infinity] | unit_interval
///   set|algebra|proximity|seq|fn|fnseq ID = EXPR [in EXPR]
///   check LAWID ARG*        find_counterexample LAWID ARG*
///   stone ID [--dot PATH]   report
///
/// Set expressions combine with + - ∪ | (one level) and ∩ & (tighter);
/// ~X is the complement.
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    Program p;
    while (true) {
      while (at(TokenKind::Newline)) ++pos_;
      if (at(TokenKind::End)) break;
      p.statements.push_back(statement());
    }
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(TokenKind k) const { return cur().kind == k; }
  bool at_symbol(std::string_view s) const { return cur().kind == TokenKind::Symbol && cur().text == s; }
  // `{` glued to the previous token opens a call body: pl{0: 0}, table(F, I){0: 1}
  bool at_body() const { return at_symbol("{") && !cur().spaced; }
  bool at_ident(std::string_view s) const { return cur().kind == TokenKind::Ident && cur().text == s; }

  [[noreturn]] void fail(const std::string& what) const {
    std::string got = cur().kind == TokenKind::Newline ? "end of line" : cur().kind == TokenKind::End ? "end of input" : "'" + cur().text + "'";
    throw DslError(cur().loc, what + ", found " + got);
  }

  Token expect(TokenKind k, const std::string& what) {
    if (!at(k)) fail("expected " + what);
    return toks_[pos_++];
  }

  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }

  void end_of_statement() {
    if (!at(TokenKind::Newline) && !at(TokenKind::End)) fail("expected end of statement");
  }

  Stmt statement() {
    const auto kw = expect(TokenKind::Ident, "a statement keyword");
    Stmt s;
    s.loc = kw.loc;
    static const std::vector<StmtKind> kinds{StmtKind::Universe, StmtKind::Set, StmtKind::Algebra, StmtKind::Proximity,
                                             StmtKind::Seq, StmtKind::Fn, StmtKind::FnSeq, StmtKind::Check,
                                             StmtKind::FindCounterexample, StmtKind::Stone, StmtKind::Report};
    bool known = false;
    for (auto k : kinds)
      if (kw.text == keyword(k)) {
        s.kind = k;
        known = true;
      }
    if (!known) throw DslError(kw.loc, "unknown statement '" + kw.text + "'");

    if (s.kind == StmtKind::Report) {
      end_of_statement();
      return s;
    }
    const auto name = expect(TokenKind::Ident, is_declaration(s.kind) ? "an identifier" : s.kind == StmtKind::Stone ? "an algebra" : "a law id");
    s.name = name.text;
    s.name_loc = name.loc;

    if (is_declaration(s.kind)) {
      expect_symbol("=");
      s.value = s.kind == StmtKind::Universe ? universe_expr() : expr();
      if (at_ident("in")) {
        ++pos_;
        s.scope = primary();
      }
    } else if (s.kind == StmtKind::Stone) {
      if (at(TokenKind::Flag)) {
        if (cur().text != "--dot") fail("expected --dot");
        ++pos_;
        s.dot_path = expect(TokenKind::String, "a path").text;
      }
    } else {
      while (!at(TokenKind::Newline) && !at(TokenKind::End)) s.args.push_back(expr());
    }
    end_of_statement();
    return s;
  }

  Expr universe_expr() {
    Expr e = primary();
    if (e.kind == ExprKind::Ident && e.text == "integers" && at_ident("with_infinity")) {
      ++pos_;
      e.text = "integers with_infinity";
    }
    return e;
  }

  Expr expr() {
    Expr lhs = intersection();
    while (at_symbol("+") || at_symbol("-") || at_symbol("∪") || at_symbol("|")) lhs = binary(std::move(lhs), false);
    return lhs;
  }

  Expr intersection() {
    Expr lhs = unary();
    while (at_symbol("∩") || at_symbol("&")) lhs = binary(std::move(lhs), true);
    return lhs;
  }

  Expr binary(Expr lhs, bool tight) {
    Expr e;
    e.kind = ExprKind::Binary;
    e.loc = cur().loc;
    e.text = toks_[pos_++].text;
    e.args.push_back(std::move(lhs));
    e.args.push_back(tight ? unary() : intersection());
    e.keys.assign(2, "");
    return e;
  }

  Expr unary() {
    if (at_symbol("~")) {
      Expr e;
      e.kind = ExprKind::Complement;
      e.loc = cur().loc;
      ++pos_;
      e.args.push_back(unary());
      e.keys.assign(1, "");
      return e;
    }
    if (at_symbol("-") && toks_[pos_ + 1].kind == TokenKind::Number) {
      const auto loc = cur().loc;
      ++pos_;
      Expr n = number();
      n.text = "-" + n.text;
      n.loc = loc;
      return n;
    }
    return primary();
  }

  Expr number() {
    const auto t = expect(TokenKind::Number, "a number");
    Expr e;
    e.kind = ExprKind::Number;
    e.loc = t.loc;
    e.text = t.text;
    if (at_symbol("/")) {
      ++pos_;
      e.text += "/" + expect(TokenKind::Number, "a denominator").text;
    }
    return e;
  }

  Expr primary() {
    if (at(TokenKind::Number)) return number();
    if (at_symbol("{")) return set_literal();
    if (at_symbol("[")) {
      const auto loc = cur().loc;
      ++pos_;
      return interval_rest(unary(), true, loc);
    }
    if (at_symbol("(")) {
      const auto loc = cur().loc;
      ++pos_;
      Expr inner = expr();
      if (at_symbol(",")) return interval_rest(std::move(inner), false, loc);
      expect_symbol(")");
      return inner;
    }
    const auto t = expect(TokenKind::Ident, "an expression");
    Expr e;
    e.loc = t.loc;
    e.text = t.text;
    if (t.text == "inf") {
      e.kind = ExprKind::Infinity;
      return e;
    }
    if (!at_symbol("(") && !at_body()) return e;
    e.kind = ExprKind::Call;
    if (at_symbol("(")) {
      e.parens = true;
      ++pos_;
      if (!at_symbol(")")) {
        while (true) {
          if (cur().kind == TokenKind::Ident && toks_[pos_ + 1].kind == TokenKind::Symbol && toks_[pos_ + 1].text == "=") {
            e.keys.push_back(cur().text);
            pos_ += 2;
          } else {
            e.keys.emplace_back();
          }
          e.args.push_back(expr());
          if (at_symbol(";") && e.tail_from == Expr::npos) {
            ++pos_;
            e.tail_from = e.args.size();
            continue;
          }
          if (at_symbol(",")) {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect_symbol(")");
    }
    if (at_body()) {
      e.has_body = true;
      ++pos_;
      while (!at_symbol("}")) {
        Expr k = expr();
        expect_symbol(":");
        Expr v = expr();
        e.body.emplace_back(std::move(k), std::move(v));
        if (at_symbol(",") || at_symbol(";")) {
          ++pos_;
          continue;
        }
        if (!at_symbol("}")) fail("expected ',' or '}'");
      }
      ++pos_;
    }
    return e;
  }

  Expr set_literal() {
    Expr e;
    e.kind = ExprKind::SetLiteral;
    e.loc = cur().loc;
    expect_symbol("{");
    while (!at_symbol("}")) {
      e.args.push_back(unary());
      e.keys.emplace_back();
      if (at_symbol(",")) {
        ++pos_;
        continue;
      }
      if (!at_symbol("}")) fail("expected ',' or '}'");
    }
    ++pos_;
    return e;
  }

  Expr interval_rest(Expr lo, bool lo_closed, Location loc) {
    Expr e;
    e.kind = ExprKind::Interval;
    e.loc = loc;
    e.lo_closed = lo_closed;
    expect_symbol(",");
    Expr hi = unary();
    if (at_symbol("]")) {
      e.hi_closed = true;
    } else if (at_symbol(")")) {
      e.hi_closed = false;
    } else {
      fail("expected ']' or ')'");
    }
    ++pos_;
    e.args = {std::move(lo), std::move(hi)};
    e.keys.assign(2, "");
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline Program parse(std::string_view source) { return Parser(tokenize(source)).program(); }

}  // namespace proxlab::dsl
