#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "proxlab/dsl/ast.hpp"

namespace proxlab::dsl {

enum class TokenKind { Ident, Number, String, Flag, Symbol, Newline, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  Location loc;
  bool spaced = false;  // whitespace or a line break before the token
};

/// Splits source text into tokens. Newlines end statements only outside
/// brackets; `#` starts a comment. The set operators may be written as
/// ∪ / ∩ or as | / &.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    int depth = 0;
    std::size_t mark = 0;  // tokens before this index are already flagged
    bool gap = true;
    auto flag = [&] {
      for (; mark < out.size(); ++mark) {
        out[mark].spaced = gap;
        gap = false;
      }
    };
    while (pos_ < src_.size()) {
      flag();
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        gap = true;
        continue;
      }
      if (c == '\n') {
        const auto at = here();
        advance();
        gap = true;
        if (depth <= 0 && !out.empty() && out.back().kind != TokenKind::Newline) out.push_back({TokenKind::Newline, "\n", at});
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        gap = true;
        continue;
      }
      const auto at = here();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back({TokenKind::Ident, identifier(), at});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) s += advance();
        out.push_back({TokenKind::Number, s, at});
        continue;
      }
      if (c == '"') {
        out.push_back({TokenKind::String, string_literal(), at});
        continue;
      }
      if (c == '-' && peek(1) == '-') {
        advance();
        advance();
        out.push_back({TokenKind::Flag, "--" + identifier(), at});
        skip_blanks();
        if (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '"') {
          // bare path argument
          const auto pat = here();
          std::string s;
          while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_]))) s += advance();
          out.push_back({TokenKind::String, s, pat});
        }
        continue;
      }
      if (src_.substr(pos_, 3) == "∪" || src_.substr(pos_, 3) == "∩") {
        out.push_back({TokenKind::Symbol, std::string(src_.substr(pos_, 3)), at});
        pos_ += 3;
        column_ += 1;
        continue;
      }
      static constexpr std::string_view symbols = "=(){}[],;:+-|&~/";
      if (symbols.find(c) == std::string_view::npos)
        throw DslError(at, std::string("unexpected character '") + c + "'");
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      out.push_back({TokenKind::Symbol, std::string(1, advance()), at});
    }
    flag();
    if (!out.empty() && out.back().kind != TokenKind::Newline) out.push_back({TokenKind::Newline, "\n", here()});
    out.push_back({TokenKind::End, "", here()});
    return out;
  }

 private:
  Location here() const { return {line_, column_}; }

  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
    return c;
  }

  void skip_blanks() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) advance();
  }

  // letters, digits and '_', plus '.' between alphanumerics (law ids)
  std::string identifier() {
    std::string s;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        s += advance();
      } else if (c == '.' && !s.empty() && std::isalnum(static_cast<unsigned char>(peek(1)))) {
        s += advance();
      } else {
        break;
      }
    }
    return s;
  }

  std::string string_literal() {
    const auto at = here();
    advance();
    std::string s;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') throw DslError(at, "unterminated string");
      char c = advance();
      if (c == '"') break;
      if (c == '\\' && pos_ < src_.size()) c = advance();
      s += c;
    }
    return s;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline std::vector<Token> tokenize(std::string_view src) { return Lexer(src).run(); }

}  // namespace proxlab::dsl
