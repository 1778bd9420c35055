#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace warnsift::java {

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

/// Expression node. Child layout by kind:
///   Literal, Name        text = source spelling
///   This                 -
///   Field                kids[0] = object, text = member name
///   Index                kids[0] = array, kids[1] = index
///   Call                 text = method, kids[0] = receiver or null, kids[1..] = arguments
///   New                  text = type, kids = constructor arguments
///   NewArray             text = element type, kids = dimension sizes
///   Unary, Postfix       text = operator, kids[0] = operand
///   Binary               text = operator, kids[0..1]; for instanceof kids[1] is a Name holding the type
///   Assign               text = operator ("=", "+=", ...), kids[0] = target, kids[1] = value
///   Cast                 text = type, kids[0] = operand
struct Expr {
  enum class Kind { Literal, Name, This, Field, Index, Call, New, NewArray, Unary, Postfix, Binary, Assign, Cast };

  Kind kind;
  std::string text;
  std::vector<ExprPtr> kids;
  int line = 0;
};

struct Declarator {
  std::string name;
  ExprPtr init;  // may be null
  int line = 0;
};

/// Statement node. `body` holds nested statements: the statements of a block,
/// then/else of an if, the loop body of while/for.
struct Stmt {
  enum class Kind { Block, LocalDecl, ExprStmt, If, While, For, Return, Throw, Break, Continue, Empty };

  Kind kind;
  int line = 0;
  std::string type;                  // LocalDecl
  std::vector<Declarator> decls;     // LocalDecl
  ExprPtr expr;                      // ExprStmt, condition of If/While/For, value of Return/Throw
  std::vector<StmtPtr> body;
  std::vector<StmtPtr> init;         // For
  std::vector<ExprPtr> updates;      // For
};

struct Parameter {
  std::string type;
  std::string name;
};

struct FieldDecl {
  std::vector<std::string> modifiers;
  std::string type;
  std::string name;
  std::optional<std::string> initializer;  // source text of the initializer
  int line_start = 0;
  int line_end = 0;
  std::string text;                         // the whole declaration statement
  std::size_t decl_offset = 0;              // byte offset of the declaration statement

  bool has_modifier(std::string_view m) const {
    for (const auto& x : modifiers) {
      if (x == m) return true;
    }
    return false;
  }
};

struct MethodDecl {
  std::string name;
  std::vector<std::string> modifiers;
  std::string return_type;  // empty for constructors
  std::vector<Parameter> parameters;
  int line_start = 0;
  int line_end = 0;
  std::string text;                 // verbatim source from modifiers to closing brace
  std::shared_ptr<const Stmt> body; // null for abstract/native methods

  bool is_static() const {
    for (const auto& m : modifiers) {
      if (m == "static") return true;
    }
    return false;
  }
};

struct SourceUnit {
  std::string class_name;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  int line_start = 0;
  int line_end = 0;
  std::string class_text;  // verbatim class declaration
};

}  // namespace warnsift::java
