#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "warnsift/common.hpp"

namespace warnsift::java {

enum class TokenKind { Ident, Number, String, Char, Op, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;

  bool is(std::string_view s) const { return (kind == TokenKind::Op || kind == TokenKind::Ident) && text == s; }
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
inline bool ident_part(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

// Longest-match operator table; '>' is always lexed alone so that nested
// generic closers need no splitting. The expression parser reassembles
// shifts from adjacent '>' tokens.
inline constexpr std::array<std::string_view, 28> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=",
    "*=",  "/=",  "%=", "&=", "|=", "^=", "<<", "+",  "-",  "*",  "/",  "%",  "=",  "<",
};

}  // namespace detail

/// Splits Java source into tokens, dropping whitespace and comments.
inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  auto advance_newlines = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) line += src[k] == '\n';
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (src.substr(i, 2) == "/*") {
      auto close = src.find("*/", i + 2);
      if (close == std::string_view::npos) throw ParseError("unterminated comment", static_cast<std::size_t>(line), ParseError::Position::Line);
      advance_newlines(i, close);
      i = close + 2;
      continue;
    }
    Token t;
    t.line = line;
    t.begin = i;
    if (detail::ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && detail::ident_part(src[j])) ++j;
      t.kind = TokenKind::Ident;
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '.' || src[j] == '_' ||
                                ((src[j] == '+' || src[j] == '-') && (src[j - 1] == 'e' || src[j - 1] == 'E') &&
                                 !(src[i] == '0' && j > i + 1 && (src[i + 1] == 'x' || src[i + 1] == 'X'))))) {
        ++j;
      }
      t.kind = TokenKind::Number;
      i = j;
    } else if (c == '"' || c == '\'') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != c) {
        if (src[j] == '\n') break;
        j += src[j] == '\\' ? 2 : 1;
      }
      if (j >= src.size() || src[j] != c) {
        throw ParseError("unterminated literal", static_cast<std::size_t>(line), ParseError::Position::Line);
      }
      t.kind = c == '"' ? TokenKind::String : TokenKind::Char;
      i = j + 1;
    } else {
      t.kind = TokenKind::Op;
      std::size_t len = 1;
      for (auto op : detail::kOperators) {
        if (src.substr(i, op.size()) == op) {
          len = op.size();
          break;
        }
      }
      i += len;
    }
    t.end = i;
    t.text = std::string(src.substr(t.begin, t.end - t.begin));
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.begin = end.end = src.size();
  out.push_back(end);
  return out;
}

}  // namespace warnsift::java
