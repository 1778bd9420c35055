#pragma once

#include <algorithm>
// Recursive-descent parser for the Java subset handled by the front end:
// one top-level class with fields, constructors and methods; statements are
// local declarations, expression statements, blocks, if/else, while, classic
// for, return, throw, break and continue. Nested types, lambdas, try/catch,
// switch, enhanced for and array initializers are rejected with a ParseError
// carrying the offending line.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "warnsift/common.hpp"
#include "warnsift/java/ast.hpp"
#include "warnsift/java/lexer.hpp"

namespace warnsift::java {

namespace detail {

inline const std::set<std::string, std::less<>>& modifier_words() {
  static const std::set<std::string, std::less<>> words = {
      "public", "private", "protected", "static", "final", "abstract", "native",
      "synchronized", "transient", "volatile", "strictfp", "default"};
  return words;
}

inline const std::set<std::string, std::less<>>& primitive_types() {
  static const std::set<std::string, std::less<>> words = {"boolean", "byte", "char", "short", "int",
                                                           "long",    "float", "double", "void"};
  return words;
}

inline const std::set<std::string, std::less<>>& reserved_words() {
  static const std::set<std::string, std::less<>> words = {
      "if", "else", "while", "for", "do", "return", "throw", "break", "continue", "new", "this",
      "super", "class", "interface", "enum", "try", "catch", "finally", "switch", "case", "instanceof",
      "true", "false", "null", "assert", "synchronized", "import", "package", "extends", "implements", "throws"};
  return words;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), toks_(lex(src)) {}

  SourceUnit parse_unit() {
    SourceUnit unit;
    while (peek().is("package") || peek().is("import")) {
      while (!peek().is(";")) {
        if (peek().kind == TokenKind::End) fail("unterminated declaration");
        next();
      }
      next();
    }
    const Token& first = peek();
    skip_modifiers();
    if (peek().is("interface") || peek().is("enum") || peek().is("record")) fail("only classes are supported");
    expect("class");
    unit.class_name = expect_ident("class name");
    unit.line_start = first.line;
    if (peek().is("<")) fail("generic classes are outside the supported subset");
    if (accept("extends")) parse_type();
    if (accept("implements")) {
      parse_type();
      while (accept(",")) parse_type();
    }
    expect("{");
    while (!peek().is("}")) {
      if (peek().kind == TokenKind::End) fail("unexpected end of input in class body");
      parse_member(unit);
    }
    const Token& close = next();
    unit.line_end = close.line;
    unit.class_text = std::string(src_.substr(first.begin, close.end - first.begin));
    if (peek().kind != TokenKind::End) fail("only one top-level class per file is supported");
    return unit;
  }

 private:
  // -- token plumbing -------------------------------------------------------
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(std::string_view s) {
    if (peek().is(s)) {
      next();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " near '" + peek().text + "'", static_cast<std::size_t>(peek().line),
                     ParseError::Position::Line);
  }
  const Token& expect(std::string_view s) {
    if (!peek().is(s)) fail("expected '" + std::string(s) + "'");
    return next();
  }
  std::string expect_ident(std::string_view what) {
    if (peek().kind != TokenKind::Ident || reserved_words().contains(peek().text)) {
      fail("expected " + std::string(what));
    }
    return next().text;
  }

  std::vector<std::string> skip_modifiers() {
    std::vector<std::string> mods;
    while (true) {
      if (peek().is("@") && !peek(1).is("interface")) {
        next();
        parse_qualified_name();
        if (peek().is("(")) skip_balanced("(", ")");
      } else if (peek().kind == TokenKind::Ident && modifier_words().contains(peek().text) && !peek(1).is("(")) {
        mods.push_back(next().text);
      } else {
        return mods;
      }
    }
  }

  void skip_balanced(std::string_view open, std::string_view close) {
    int depth = 0;
    do {
      if (peek().kind == TokenKind::End) fail("unbalanced '" + std::string(open) + "'");
      if (peek().is(open)) ++depth;
      if (peek().is(close)) --depth;
      next();
    } while (depth > 0);
  }

  std::string parse_qualified_name() {
    std::string name = expect_ident("identifier");
    while (peek().is(".") && peek(1).kind == TokenKind::Ident) {
      next();
      name += "." + next().text;
    }
    return name;
  }

  /// Type := QualifiedName [TypeArgs] {'[' ']'}
  std::string parse_type() {
    std::string t = parse_qualified_name();
    if (peek().is("<")) t += parse_type_args();
    while (peek().is("[") && peek(1).is("]")) {
      next();
      next();
      t += "[]";
    }
    return t;
  }

  std::string parse_type_args() {
    expect("<");
    std::string t = "<";
    if (peek().is(">")) {  // diamond
      next();
      return "<>";
    }
    while (true) {
      if (accept("?")) {
        t += "?";
        if (accept("extends")) t += " extends " + parse_type();
        else if (accept("super")) t += " super " + parse_type();
      } else {
        t += parse_type();
      }
      if (accept(",")) {
        t += ",";
        continue;
      }
      expect(">");
      return t + ">";
    }
  }

  /// Attempts `Type Ident` without consuming on failure.
  bool looks_like_declaration() {
    const std::size_t save = pos_;
    bool ok = false;
    try {
      if (peek().kind == TokenKind::Ident && !reserved_words().contains(peek().text)) {
        parse_type();
        ok = peek().kind == TokenKind::Ident && !reserved_words().contains(peek().text) &&
             (peek(1).is("=") || peek(1).is(";") || peek(1).is(",") || peek(1).is(":") || peek(1).is("["));
      }
    } catch (const ParseError&) {
      ok = false;
    }
    pos_ = save;
    return ok;
  }

  // -- members --------------------------------------------------------------
  void parse_member(SourceUnit& unit) {
    const Token& first = peek();
    if (accept(";")) return;
    auto mods = skip_modifiers();
    if (peek().is("class") || peek().is("interface") || peek().is("enum") || peek().is("@")) {
      fail("nested type declarations are outside the supported subset");
    }
    if (peek().is("{")) fail("initializer blocks are outside the supported subset");
    if (peek().is("<")) fail("generic methods are outside the supported subset");

    MethodDecl m;
    m.modifiers = mods;
    if (peek().kind == TokenKind::Ident && peek().text == unit.class_name && peek(1).is("(")) {
      m.name = next().text;  // constructor
    } else {
      std::string type = parse_type();
      std::string name = expect_ident("member name");
      if (!peek().is("(")) {
        parse_field_rest(unit, first, mods, type, name);
        return;
      }
      m.return_type = type;
      m.name = name;
    }
    expect("(");
    while (!peek().is(")")) {
      skip_modifiers();
      Parameter p;
      p.type = parse_type();
      if (accept("...")) p.type += "[]";
      p.name = expect_ident("parameter name");
      while (peek().is("[") && peek(1).is("]")) {
        next();
        next();
        p.type += "[]";
      }
      m.parameters.push_back(std::move(p));
      if (!accept(",")) break;
    }
    expect(")");
    if (accept("throws")) {
      parse_type();
      while (accept(",")) parse_type();
    }
    m.line_start = first.line;
    if (peek().is(";")) {
      const Token& semi = next();
      m.line_end = semi.line;
      m.text = std::string(src_.substr(first.begin, semi.end - first.begin));
    } else {
      m.body = parse_block();
      const Token& close = toks_[pos_ - 1];
      m.line_end = close.line;
      m.text = std::string(src_.substr(first.begin, close.end - first.begin));
    }
    unit.methods.push_back(std::move(m));
  }

  void parse_field_rest(SourceUnit& unit, const Token& first, const std::vector<std::string>& mods,
                        const std::string& type, std::string name) {
    const std::size_t begin_index = unit.fields.size();
    while (true) {
      FieldDecl f;
      f.modifiers = mods;
      f.type = type;
      while (peek().is("[") && peek(1).is("]")) {
        next();
        next();
        f.type += "[]";
      }
      f.name = name;
      if (accept("=")) {
        if (peek().is("{")) fail("array initializers are outside the supported subset");
        const std::size_t b = peek().begin;
        parse_expr();
        f.initializer = std::string(src_.substr(b, toks_[pos_ - 1].end - b));
      }
      unit.fields.push_back(std::move(f));
      if (!accept(",")) break;
      name = expect_ident("field name");
    }
    const Token& semi = expect(";");
    for (std::size_t k = begin_index; k < unit.fields.size(); ++k) {
      auto& f = unit.fields[k];
      f.line_start = first.line;
      f.line_end = semi.line;
      f.decl_offset = first.begin;
      f.text = std::string(src_.substr(first.begin, semi.end - first.begin));
    }
  }

  // -- statements -----------------------------------------------------------
  std::unique_ptr<Stmt> make_stmt(Stmt::Kind k, int line) {
    auto s = std::make_unique<Stmt>();
    s->kind = k;
    s->line = line;
    return s;
  }

  StmtPtr parse_block() {
    auto block = make_stmt(Stmt::Kind::Block, expect("{").line);
    while (!peek().is("}")) {
      if (peek().kind == TokenKind::End) fail("unexpected end of input in block");
      block->body.push_back(parse_statement());
    }
    next();
    return block;
  }

  StmtPtr parse_local_decl() {
    auto s = make_stmt(Stmt::Kind::LocalDecl, peek().line);
    s->type = parse_type();
    while (true) {
      Declarator d;
      d.line = peek().line;
      d.name = expect_ident("variable name");
      while (peek().is("[") && peek(1).is("]")) {
        next();
        next();
      }
      if (peek().is(":")) fail("enhanced for loops are outside the supported subset");
      if (accept("=")) {
        if (peek().is("{")) fail("array initializers are outside the supported subset");
        d.init = parse_expr();
      }
      s->decls.push_back(std::move(d));
      if (!accept(",")) break;
    }
    return s;
  }

  StmtPtr parse_statement() {
    const Token& t = peek();
    const int line = t.line;
    if (t.is("{")) return parse_block();
    if (t.is(";")) {
      next();
      return make_stmt(Stmt::Kind::Empty, line);
    }
    if (t.is("if")) {
      next();
      auto s = make_stmt(Stmt::Kind::If, line);
      expect("(");
      s->expr = parse_expr();
      expect(")");
      s->body.push_back(parse_statement());
      if (accept("else")) s->body.push_back(parse_statement());
      return s;
    }
    if (t.is("while")) {
      next();
      auto s = make_stmt(Stmt::Kind::While, line);
      expect("(");
      s->expr = parse_expr();
      expect(")");
      s->body.push_back(parse_statement());
      return s;
    }
    if (t.is("for")) {
      next();
      auto s = make_stmt(Stmt::Kind::For, line);
      expect("(");
      if (!peek().is(";")) {
        skip_modifiers();
        if (looks_like_declaration()) {
          s->init.push_back(parse_local_decl());
        } else {
          do {
            auto e = make_stmt(Stmt::Kind::ExprStmt, peek().line);
            e->expr = parse_expr();
            s->init.push_back(std::move(e));
          } while (accept(","));
        }
      }
      expect(";");
      if (!peek().is(";")) s->expr = parse_expr();
      expect(";");
      if (!peek().is(")")) {
        do {
          s->updates.push_back(parse_expr());
        } while (accept(","));
      }
      expect(")");
      s->body.push_back(parse_statement());
      return s;
    }
    if (t.is("return") || t.is("throw")) {
      next();
      auto s = make_stmt(t.text == "return" ? Stmt::Kind::Return : Stmt::Kind::Throw, line);
      if (!peek().is(";")) s->expr = parse_expr();
      expect(";");
      return s;
    }
    if (t.is("break") || t.is("continue")) {
      next();
      if (peek().kind == TokenKind::Ident) fail("labeled jumps are outside the supported subset");
      expect(";");
      return make_stmt(t.text == "break" ? Stmt::Kind::Break : Stmt::Kind::Continue, line);
    }
    for (auto kw : {"do", "switch", "try", "synchronized", "class", "interface", "enum", "assert", "case", "default",
                    "catch", "finally", "else"}) {
      if (t.is(kw)) fail("'" + std::string(kw) + "' is outside the supported subset");
    }
    if (peek(0).kind == TokenKind::Ident && peek(1).is(":")) fail("labeled statements are outside the supported subset");
    skip_modifiers();  // final locals
    if (looks_like_declaration()) {
      auto s = parse_local_decl();
      expect(";");
      return s;
    }
    auto s = make_stmt(Stmt::Kind::ExprStmt, line);
    s->expr = parse_expr();
    expect(";");
    return s;
  }

  // -- expressions ----------------------------------------------------------
  ExprPtr make(Expr::Kind k, std::string text, int line) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->text = std::move(text);
    e->line = line;
    return e;
  }

  ExprPtr parse_expr() { return parse_assignment(); }

  ExprPtr parse_assignment() {
    auto lhs = parse_binary(0);
    if (peek().is("?")) fail("conditional expressions are outside the supported subset");
    if (peek().is("->")) fail("lambdas are outside the supported subset");
    static const std::set<std::string, std::less<>> assign_ops = {"=",  "+=", "-=", "*=", "/=", "%=",
                                                                  "&=", "|=", "^=", "<<="};
    std::string op;
    if (peek().kind == TokenKind::Op && assign_ops.contains(peek().text)) {
      op = peek().text;
      next();
    } else if (peek().is(">") && peek(1).is(">=") && peek(1).begin == peek().end) {
      next();
      next();
      op = ">>=";
    }
    if (op.empty()) return lhs;
    if (lhs->kind != Expr::Kind::Name && lhs->kind != Expr::Kind::Field && lhs->kind != Expr::Kind::Index) {
      fail("invalid assignment target");
    }
    auto e = make(Expr::Kind::Assign, op, lhs->line);
    e->kids.push_back(std::move(lhs));
    e->kids.push_back(parse_assignment());
    return e;
  }

  /// Reads the binary operator at the cursor without consuming it. Shift
  /// operators are reassembled from adjacent '>' tokens.
  std::pair<std::string, int> peek_binary_op() const {
    const Token& t = peek();
    if (t.kind == TokenKind::Ident && t.text == "instanceof") return {"instanceof", 6};
    if (t.kind != TokenKind::Op) return {"", -1};
    if (t.text == ">") {
      if (peek(1).is(">") && peek(1).begin == t.end) {
        if (peek(2).is(">") && peek(2).begin == peek(1).end) {
          if (peek(3).is(">=") && peek(3).begin == peek(2).end) return {"", -1};
          return {">>>", 7};
        }
        if (peek(2).is(">=") && peek(2).begin == peek(1).end) return {"", -1};
        if (peek(2).is("=") && peek(2).begin == peek(1).end) return {"", -1};
        return {">>", 7};
      }
      if (peek(1).is(">=") && peek(1).begin == t.end) return {"", -1};
      return {">", 6};
    }
    static const std::vector<std::pair<std::string_view, int>> table = {
        {"||", 0}, {"&&", 1}, {"|", 2},  {"^", 3},  {"&", 4},  {"==", 5}, {"!=", 5}, {"<", 6},
        {"<=", 6}, {">=", 6}, {"<<", 7}, {"+", 8},  {"-", 8},  {"*", 9},  {"/", 9},  {"%", 9}};
    for (const auto& [op, prec] : table) {
      if (t.text == op) return {std::string(op), prec};
    }
    return {"", -1};
  }

  ExprPtr parse_binary(int min_prec) {
    auto lhs = parse_unary();
    while (true) {
      auto [op, prec] = peek_binary_op();
      if (prec < min_prec || prec < 0) return lhs;
      const int line = peek().line;
      next();
      if (op == ">>") next();
      if (op == ">>>") {
        next();
        next();
      }
      ExprPtr rhs;
      if (op == "instanceof") {
        rhs = make(Expr::Kind::Name, parse_type(), line);
      } else {
        rhs = parse_binary(prec + 1);
      }
      auto e = make(Expr::Kind::Binary, op, line);
      e->kids.push_back(std::move(lhs));
      e->kids.push_back(std::move(rhs));
      lhs = std::move(e);
    }
  }

  bool looks_like_cast() {
    if (!peek().is("(")) return false;
    const std::size_t save = pos_;
    bool cast = false;
    try {
      next();
      if (peek().kind == TokenKind::Ident && !reserved_words().contains(peek().text)) {
        const bool primitive = primitive_types().contains(peek().text);
        parse_type();
        if (peek().is(")")) {
          const Token& after = peek(1);
          const bool operand_start = after.kind == TokenKind::Ident || after.kind == TokenKind::Number ||
                                     after.kind == TokenKind::String || after.kind == TokenKind::Char ||
                                     after.is("(") || after.is("!") || after.is("~");
          const bool reserved_op = after.kind == TokenKind::Ident && after.text == "instanceof";
          cast = (primitive && (operand_start || after.is("-") || after.is("+"))) || (operand_start && !reserved_op);
        }
      }
    } catch (const ParseError&) {
      cast = false;
    }
    pos_ = save;
    return cast;
  }

  ExprPtr parse_unary() {
    const Token& t = peek();
    if (t.is("+") || t.is("-") || t.is("!") || t.is("~") || t.is("++") || t.is("--")) {
      next();
      auto e = make(Expr::Kind::Unary, t.text, t.line);
      e->kids.push_back(parse_unary());
      return e;
    }
    if (looks_like_cast()) {
      const int line = next().line;
      auto e = make(Expr::Kind::Cast, parse_type(), line);
      expect(")");
      e->kids.push_back(parse_unary());
      return e;
    }
    return parse_postfix(parse_primary());
  }

  std::vector<ExprPtr> parse_args() {
    std::vector<ExprPtr> args;
    expect("(");
    if (accept(")")) return args;
    do {
      args.push_back(parse_expr());
    } while (accept(","));
    expect(")");
    return args;
  }

  ExprPtr parse_postfix(ExprPtr e) {
    while (true) {
      const Token& t = peek();
      if (t.is(".")) {
        next();
        if (peek().is("<")) fail("explicit generic invocations are outside the supported subset");
        if (peek().is("new") || peek().is("class")) fail("'" + peek().text + "' after '.' is outside the supported subset");
        const Token& name = peek();
        if (peek().is("this")) fail("qualified this is outside the supported subset");
        expect_ident("member name");
        if (peek().is("(")) {
          auto call = make(Expr::Kind::Call, name.text, name.line);
          call->kids.push_back(std::move(e));
          for (auto& a : parse_args()) call->kids.push_back(std::move(a));
          e = std::move(call);
        } else {
          auto f = make(Expr::Kind::Field, name.text, name.line);
          f->kids.push_back(std::move(e));
          e = std::move(f);
        }
      } else if (t.is("[")) {
        next();
        auto idx = make(Expr::Kind::Index, "", t.line);
        idx->kids.push_back(std::move(e));
        idx->kids.push_back(parse_expr());
        expect("]");
        e = std::move(idx);
      } else if (t.is("++") || t.is("--")) {
        next();
        auto p = make(Expr::Kind::Postfix, t.text, t.line);
        p->kids.push_back(std::move(e));
        e = std::move(p);
      } else if (t.is("::")) {
        fail("method references are outside the supported subset");
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number:
      case TokenKind::String:
      case TokenKind::Char:
        next();
        return make(Expr::Kind::Literal, t.text, t.line);
      case TokenKind::End:
        fail("unexpected end of input in expression");
      case TokenKind::Op:
        if (t.is("(")) {
          next();
          auto e = parse_expr();
          expect(")");
          return e;
        }
        fail("unexpected token in expression");
      case TokenKind::Ident:
        break;
    }
    if (t.is("true") || t.is("false") || t.is("null")) {
      next();
      return make(Expr::Kind::Literal, t.text, t.line);
    }
    if (t.is("this")) {
      next();
      if (peek().is("(")) fail("constructor chaining is outside the supported subset");
      return make(Expr::Kind::This, "this", t.line);
    }
    if (t.is("super")) fail("'super' is outside the supported subset");
    if (t.is("new")) {
      next();
      std::string type = parse_qualified_name();
      if (peek().is("<")) type += parse_type_args();
      if (peek().is("[")) {
        auto e = make(Expr::Kind::NewArray, type, t.line);
        while (peek().is("[")) {
          next();
          if (peek().is("]")) {
            next();
            if (peek().is("{")) fail("array initializers are outside the supported subset");
            e->text += "[]";
            continue;
          }
          e->kids.push_back(parse_expr());
          expect("]");
        }
        return e;
      }
      auto e = make(Expr::Kind::New, type, t.line);
      e->kids = parse_args();
      if (peek().is("{")) fail("anonymous classes are outside the supported subset");
      return e;
    }
    if (reserved_words().contains(t.text) || (primitive_types().contains(t.text) && !peek(1).is("."))) {
      fail("unexpected keyword in expression");
    }
    next();
    if (peek().is("(")) {
      auto call = make(Expr::Kind::Call, t.text, t.line);
      call->kids.push_back(nullptr);
      for (auto& a : parse_args()) call->kids.push_back(std::move(a));
      return call;
    }
    return make(Expr::Kind::Name, t.text, t.line);
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one Java source file within the supported subset.
inline SourceUnit parse_java_subset(std::string_view source) { return detail::Parser(source).parse_unit(); }

}  // namespace warnsift::java
