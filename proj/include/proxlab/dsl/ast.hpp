#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace proxlab::dsl {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;

  std::string render() const { return std::to_string(line) + ":" + std::to_string(column); }
};

/// Syntax or elaboration error at a source location.
class DslError : public std::runtime_error {
 public:
  DslError(Location at, const std::string& message)
      : std::runtime_error(message), at_(at) {}

  Location where() const { return at_; }
  std::string render() const { return "line " + std::to_string(at_.line) + ", column " + std::to_string(at_.column) + ": " + what(); }

 private:
  Location at_;
};

enum class ExprKind { Ident, Number, Infinity, SetLiteral, Interval, Call, Binary, Complement };

struct Expr {
  ExprKind kind = ExprKind::Ident;
  std::string text;  // identifier, numeral, callee or operator
  std::vector<Expr> args;
  std::vector<std::string> keys;  // per argument, empty when positional
  std::size_t tail_from = npos;   // index of the first argument after ';'
  bool parens = false;            // call written with an argument list
  bool has_body = false;          // call followed by {k: v, ...}
  std::vector<std::pair<Expr, Expr>> body;
  bool lo_closed = true, hi_closed = true;
  Location loc;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const Expr* arg(const std::string& key) const {
    for (std::size_t i = 0; i < args.size(); ++i)
      if (keys[i] == key) return &args[i];
    return nullptr;
  }

  bool operator==(const Expr& o) const {
    return kind == o.kind && text == o.text && args == o.args && keys == o.keys && tail_from == o.tail_from &&
           parens == o.parens && has_body == o.has_body && body == o.body && lo_closed == o.lo_closed &&
           hi_closed == o.hi_closed;
  }
};

inline std::string render(const Expr& e);

namespace detail {

inline std::string render_operand(const Expr& e) {
  if (e.kind == ExprKind::Binary) return "(" + render(e) + ")";
  return render(e);
}

}  // namespace detail

inline std::string render(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Ident:
    case ExprKind::Number: return e.text;
    case ExprKind::Infinity: return "inf";
    case ExprKind::SetLiteral: {
      std::string s = "{";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + render(e.args[i]);
      return s + "}";
    }
    case ExprKind::Interval:
      return std::string(e.lo_closed ? "[" : "(") + render(e.args[0]) + ", " + render(e.args[1]) + (e.hi_closed ? "]" : ")");
    case ExprKind::Call: {
      std::string s = e.text;
      if (e.parens) {
        s += "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) {
          if (i) s += i == e.tail_from ? "; " : ", ";
          if (!e.keys[i].empty()) s += e.keys[i] + "=";
          s += render(e.args[i]);
        }
        s += ")";
      }
      if (e.has_body) {
        s += "{";
        for (std::size_t i = 0; i < e.body.size(); ++i)
          s += (i ? ", " : "") + render(e.body[i].first) + ": " + render(e.body[i].second);
        s += "}";
      }
      return s;
    }
    case ExprKind::Binary: return detail::render_operand(e.args[0]) + " " + e.text + " " + detail::render_operand(e.args[1]);
    case ExprKind::Complement: return "~" + detail::render_operand(e.args[0]);
  }
  return "?";
}

enum class StmtKind { Universe, Set, Algebra, Proximity, Seq, Fn, FnSeq, Check, FindCounterexample, Stone, Report };

inline const char* keyword(StmtKind k) {
  switch (k) {
    case StmtKind::Universe: return "universe";
    case StmtKind::Set: return "set";
    case StmtKind::Algebra: return "algebra";
    case StmtKind::Proximity: return "proximity";
    case StmtKind::Seq: return "seq";
    case StmtKind::Fn: return "fn";
    case StmtKind::FnSeq: return "fnseq";
    case StmtKind::Check: return "check";
    case StmtKind::FindCounterexample: return "find_counterexample";
    case StmtKind::Stone: return "stone";
    case StmtKind::Report: return "report";
  }
  return "?";
}

inline bool is_declaration(StmtKind k) { return k <= StmtKind::FnSeq; }

struct Stmt {
  StmtKind kind = StmtKind::Report;
  Location loc;
  std::string name;  // declared identifier, law id, or stone subject
  Location name_loc;
  Expr value;                 // declarations
  std::optional<Expr> scope;  // `in U`
  std::vector<Expr> args;     // commands
  std::optional<std::string> dot_path;

  bool operator==(const Stmt& o) const {
    return kind == o.kind && name == o.name && value == o.value && scope == o.scope && args == o.args &&
           dot_path == o.dot_path;
  }
};

struct Program {
  std::vector<Stmt> statements;

  std::size_t declarations() const {
    std::size_t n = 0;
    for (const auto& s : statements) n += is_declaration(s.kind) ? 1 : 0;
    return n;
  }
  std::size_t commands() const { return statements.size() - declarations(); }

  bool operator==(const Program&) const = default;
};

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string render(const Stmt& s) {
  std::string out = keyword(s.kind);
  if (is_declaration(s.kind)) {
    out += " " + s.name + " = " + render(s.value);
    if (s.scope) out += " in " + render(*s.scope);
    return out;
  }
  if (s.kind == StmtKind::Report) return out;
  out += " " + s.name;
  for (const auto& a : s.args) out += " " + render(a);
  if (s.dot_path) out += " --dot " + quote(*s.dot_path);
  return out;
}

/// Canonical source text; parsing it yields an equal Program.
inline std::string render(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) out += render(s) + "\n";
  return out;
}

}  // namespace proxlab::dsl
