#pragma once

// Lowering of parsed methods to an untyped, Jimple-style 3-address IR.
// Every instruction performs one operation and defines at most one variable;
// nested expressions are flattened through $stackN temporaries.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "warnsift/common.hpp"
#include "warnsift/java/ast.hpp"

namespace warnsift {

enum class InstrKind { Assign, Unary, Binary, Invoke, FieldAccess, ArrayOp, Branch, Label, Return, Nop };

inline std::string_view to_string(InstrKind k) {
  static constexpr std::string_view names[] = {"assign", "unary", "binary", "invoke", "field_access",
                                               "array_op", "branch", "label", "return", "nop"};
  return names[static_cast<int>(k)];
}

struct IrInstruction {
  std::size_t index = 0;
  InstrKind kind = InstrKind::Nop;
  std::set<std::string> defs;
  std::set<std::string> uses;
  int source_line = 0;
  std::string render;
  /// Innermost conditional branch whose outcome decides whether this
  /// instruction executes (structural control dependence).
  std::optional<std::size_t> control_parent;
  /// Branches only: index of the target label instruction.
  std::optional<std::size_t> jump_target;
  /// Branches only: true for `if ... goto`, false for `goto`.
  bool conditional = false;
};

struct IrFunction {
  std::string name;
  int line_start = 0;
  int line_end = 0;
  std::vector<IrInstruction> instructions;
};

/// Canonical text of a whole function, one instruction per line.
inline std::string render(const IrFunction& f) {
  std::string out;
  for (const auto& ins : f.instructions) {
    out += ins.render;
    out += '\n';
  }
  return out;
}

class LoweringError : public ParseError {
 public:
  LoweringError(const std::string& what, int line)
      : ParseError("cannot lower: " + what, static_cast<std::size_t>(line), Position::Line) {}
};

namespace detail {

// Local variables are written between these markers until the whole function
// is lowered, then renamed v0, v1, ... in order of first appearance.
inline constexpr char kVarOpen = '\x01';
inline constexpr char kVarClose = '\x02';

class Lowerer {
 public:
  Lowerer(const java::SourceUnit* unit, const java::MethodDecl& method) : unit_(unit), method_(method) {}

  IrFunction run() {
    IrFunction f;
    f.name = method_.name;
    f.line_start = method_.line_start;
    f.line_end = method_.line_end;
    for (const auto& p : method_.parameters) locals_.insert(p.name);
    if (method_.body) collect_locals(*method_.body);
    for (std::size_t i = 0; i < method_.parameters.size(); ++i) {
      const auto& p = method_.parameters[i];
      emit(InstrKind::Assign, p.name, marked(p.name), {},
           ":= @parameter" + std::to_string(i) + ": " + p.type, method_.line_start, " ");
    }
    if (method_.body) lower_stmt(*method_.body);
    resolve_jumps();
    canonicalize();
    f.instructions = std::move(code_);
    return f;
  }

 private:
  struct Operand {
    std::string text;            // rendered, locals marked
    std::set<std::string> vars;  // variables read when this operand is used
    std::string key;             // variable name if the operand is a single variable
  };

  struct Rvalue {
    InstrKind kind = InstrKind::Assign;
    std::string text;
    std::set<std::string> uses;
  };

  // -- helpers --------------------------------------------------------------
  static std::string marked(const std::string& name) { return std::string(1, kVarOpen) + name + kVarClose; }

  void collect_locals(const java::Stmt& s) {
    for (const auto& d : s.decls) locals_.insert(d.name);
    for (const auto& c : s.body) collect_locals(*c);
    for (const auto& c : s.init) collect_locals(*c);
  }

  bool is_local(const std::string& n) const { return locals_.contains(n); }

  const java::FieldDecl* own_field(const std::string& n) const {
    if (!unit_ || is_local(n)) return nullptr;
    for (const auto& f : unit_->fields) {
      if (f.name == n) return &f;
    }
    return nullptr;
  }

  bool is_class_like(const java::Expr& e) const {
    if (e.kind != java::Expr::Kind::Name) return false;
    if (is_local(e.text) || own_field(e.text)) return false;
    return !e.text.empty() && e.text[0] >= 'A' && e.text[0] <= 'Z';
  }

  std::string field_ref(const java::FieldDecl& f) const {
    if (f.has_modifier("static")) return "<" + unit_->class_name + ": " + f.name + ">";
    return "this.<" + f.name + ">";
  }

  /// A static final field with a single literal initializer is folded into
  /// its value, as the Java compiler does for constants.
  std::optional<std::string> folded_constant(const java::FieldDecl& f) const {
    if (!f.has_modifier("static") || !f.has_modifier("final") || !f.initializer) return std::nullopt;
    const auto& init = *f.initializer;
    if (init.empty()) return std::nullopt;
    if (init.front() == '"' && init.back() == '"' && init.size() >= 2) {
      for (std::size_t i = 1; i + 1 < init.size(); ++i) {
        if (init[i] == '"' && init[i - 1] != '\\') return std::nullopt;
      }
      return init;
    }
    const bool numeric = std::all_of(init.begin(), init.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_';
    }) && std::isdigit(static_cast<unsigned char>(init.front()));
    if (numeric || init == "true" || init == "false") return init;
    return std::nullopt;
  }

  std::string new_temp() { return "$stack" + std::to_string(temp_counter_++); }
  std::size_t new_label() { return label_counter_++; }

  std::size_t emit(InstrKind kind, const std::string& def_key, const std::string& def_render,
                   std::set<std::string> uses, const std::string& rhs, int line, std::string_view assign = " = ") {
    IrInstruction ins;
    ins.index = code_.size();
    ins.kind = kind;
    if (!def_key.empty()) ins.defs.insert(def_key);
    if (!def_render.empty()) {
      ins.render = def_render + std::string(assign) + rhs;
    } else {
      ins.render = rhs;
    }
    ins.uses = std::move(uses);
    ins.source_line = clamp_line(line);
    ins.control_parent = guard_;
    code_.push_back(std::move(ins));
    return code_.size() - 1;
  }

  int clamp_line(int line) const {
    if (line < method_.line_start) return method_.line_start;
    if (line > method_.line_end) return method_.line_end;
    return line;
  }

  std::size_t emit_jump(std::size_t label, bool conditional, std::set<std::string> uses, const std::string& text,
                        int line) {
    auto at = emit(InstrKind::Branch, "", "", std::move(uses), text, line);
    code_[at].conditional = conditional;
    pending_jumps_.emplace_back(at, label);
    return at;
  }

  void place_label(std::size_t label, int line) {
    label_at_[label] = emit(InstrKind::Label, "", "", {}, "label" + std::to_string(label) + ":", line);
  }

  void resolve_jumps() {
    for (auto [at, label] : pending_jumps_) code_[at].jump_target = label_at_.at(label);
  }

  void canonicalize() {
    std::map<std::string, std::string> names;
    for (auto& ins : code_) {
      std::string out;
      for (std::size_t i = 0; i < ins.render.size(); ++i) {
        if (ins.render[i] != kVarOpen) {
          out += ins.render[i];
          continue;
        }
        const auto close = ins.render.find(kVarClose, i);
        const auto name = ins.render.substr(i + 1, close - i - 1);
        auto [it, fresh] = names.emplace(name, "");
        if (fresh) it->second = "v" + std::to_string(names.size() - 1);
        out += it->second;
        i = close;
      }
      ins.render = std::move(out);
    }
  }

  static std::set<std::string> merge(std::set<std::string> a, const std::set<std::string>& b) {
    a.insert(b.begin(), b.end());
    return a;
  }

  static std::string strip_marks(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c != kVarOpen && c != kVarClose) out += c;
    }
    return out;
  }

  // -- expressions ----------------------------------------------------------
  Operand to_operand(const Rvalue& rv, int line) {
    auto t = new_temp();
    emit(rv.kind, t, t, rv.uses, rv.text, line);
    return {t, {t}, t};
  }

  Operand lower_operand(const java::Expr& e) {
    using K = java::Expr::Kind;
    switch (e.kind) {
      case K::Literal:
        return {e.text, {}, ""};
      case K::This:
        return {"this", {}, ""};
      case K::Name:
        if (is_local(e.text)) return {marked(e.text), {e.text}, e.text};
        if (const auto* f = own_field(e.text)) {
          if (auto c = folded_constant(*f)) return {*c, {}, ""};
          auto ref = field_ref(*f);
          return to_operand({InstrKind::FieldAccess, ref, {ref}}, e.line);
        }
        return {e.text, {}, ""};
      default:
        break;
    }
    auto rv = lower_rvalue(e);
    if (rv.kind == InstrKind::Assign && plain_.contains(rv.text)) {
      return plain_.at(rv.text);
    }
    return to_operand(rv, e.line);
  }

  std::string lower_args(const java::Expr& call, std::size_t first, std::set<std::string>& uses) {
    std::string out = "(";
    for (std::size_t i = first; i < call.kids.size(); ++i) {
      auto a = lower_operand(*call.kids[i]);
      if (i > first) out += ", ";
      out += a.text;
      uses.insert(a.vars.begin(), a.vars.end());
    }
    return out + ")";
  }

  bool calls_static_own(const std::string& name) const {
    if (!unit_) return false;
    for (const auto& m : unit_->methods) {
      if (m.name == name && m.is_static()) return true;
    }
    return false;
  }

  Rvalue plain(const Operand& o) {
    plain_[o.text] = o;
    return {InstrKind::Assign, o.text, o.vars};
  }

  Rvalue lower_rvalue(const java::Expr& e) {
    using K = java::Expr::Kind;
    switch (e.kind) {
      case K::Literal:
      case K::This:
        return plain(lower_operand(e));
      case K::Name: {
        if (const auto* f = own_field(e.text)) {
          if (!folded_constant(*f)) {
            auto ref = field_ref(*f);
            return {InstrKind::FieldAccess, ref, {ref}};
          }
        }
        return plain(lower_operand(e));
      }
      case K::Field: {
        const auto& obj = *e.kids[0];
        if (obj.kind == K::This) {
          if (unit_) {
            for (const auto& f : unit_->fields) {
              if (f.name == e.text) {
                auto ref = field_ref(f);
                return {InstrKind::FieldAccess, ref, {ref}};
              }
            }
          }
          auto ref = "this.<" + e.text + ">";
          return {InstrKind::FieldAccess, ref, {ref}};
        }
        if (is_class_like(obj)) return {InstrKind::FieldAccess, "<" + obj.text + ": " + e.text + ">", {}};
        auto o = lower_operand(obj);
        if (e.text == "length") return {InstrKind::ArrayOp, "lengthof " + o.text, o.vars};
        auto key = strip_marks(o.text) + ".<" + e.text + ">";
        auto uses = o.vars;
        uses.insert(key);
        return {InstrKind::FieldAccess, o.text + ".<" + e.text + ">", uses};
      }
      case K::Index: {
        auto a = lower_operand(*e.kids[0]);
        auto i = lower_operand(*e.kids[1]);
        return {InstrKind::ArrayOp, a.text + "[" + i.text + "]", merge(a.vars, i.vars)};
      }
      case K::Call: {
        std::set<std::string> uses;
        std::string head;
        const auto* recv = e.kids[0].get();
        if (!recv) {
          head = calls_static_own(e.text) ? "staticinvoke <" + unit_->class_name + ": " + e.text + ">"
                                          : "virtualinvoke this.<" + e.text + ">";
        } else if (is_class_like(*recv)) {
          head = "staticinvoke <" + recv->text + ": " + e.text + ">";
        } else {
          auto r = lower_operand(*recv);
          uses = r.vars;
          head = "virtualinvoke " + r.text + ".<" + e.text + ">";
        }
        head += lower_args(e, 1, uses);
        return {InstrKind::Invoke, head, uses};
      }
      case K::New: {
        auto t = new_temp();
        emit(InstrKind::Assign, t, t, {}, "new " + e.text, e.line);
        std::set<std::string> uses = {t};
        auto args = lower_args(e, 0, uses);
        emit(InstrKind::Invoke, "", "", uses, "specialinvoke " + t + ".<init>" + args, e.line);
        return plain({t, {t}, t});
      }
      case K::NewArray: {
        std::set<std::string> uses;
        std::string dims;
        for (const auto& d : e.kids) {
          auto o = lower_operand(*d);
          dims += "[" + o.text + "]";
          uses.insert(o.vars.begin(), o.vars.end());
        }
        auto elem = e.text;
        while (elem.ends_with("[]")) {
          elem.resize(elem.size() - 2);
          dims += "[]";
        }
        const bool multi = e.kids.size() > 1;
        return {InstrKind::ArrayOp, std::string(multi ? "newmultiarray (" : "newarray (") + elem + ")" + dims, uses};
      }
      case K::Unary: {
        const auto& op = e.text;
        if (op == "+") return lower_rvalue(*e.kids[0]);
        if (op == "++" || op == "--") return plain(lower_compound(*e.kids[0], op.substr(0, 1), nullptr, e.line));
        auto o = lower_operand(*e.kids[0]);
        const char* name = op == "-" ? "neg " : op == "!" ? "not " : "compl ";
        return {InstrKind::Unary, name + o.text, o.vars};
      }
      case K::Postfix: {
        const auto& target = *e.kids[0];
        auto before = lower_operand(target);
        Operand saved = before;
        if (!before.key.empty() && !before.key.starts_with("$stack")) {
          auto t = new_temp();
          emit(InstrKind::Assign, t, t, before.vars, before.text, e.line);
          saved = {t, {t}, t};
        }
        lower_compound(target, e.text.substr(0, 1), nullptr, e.line);
        return plain(saved);
      }
      case K::Binary: {
        auto l = lower_operand(*e.kids[0]);
        if (e.text == "instanceof") return {InstrKind::Unary, l.text + " instanceof " + e.kids[1]->text, l.vars};
        auto r = lower_operand(*e.kids[1]);
        return {InstrKind::Binary, l.text + " " + e.text + " " + r.text, merge(l.vars, r.vars)};
      }
      case K::Assign: {
        const std::string op = e.text == "=" ? "" : e.text.substr(0, e.text.size() - 1);
        if (op.empty()) return plain(lower_store(*e.kids[0], *e.kids[1], e.line));
        return plain(lower_compound(*e.kids[0], op, e.kids[1].get(), e.line));
      }
      case K::Cast: {
        auto o = lower_operand(*e.kids[0]);
        return {InstrKind::Unary, "(" + e.text + ") " + o.text, o.vars};
      }
    }
    throw LoweringError("unknown expression", e.line);
  }

  /// `target = value`; returns the operand holding the stored value.
  Operand lower_store(const java::Expr& target, const java::Expr& value, int line) {
    using K = java::Expr::Kind;
    if (target.kind == K::Name && is_local(target.text)) {
      auto rv = lower_rvalue(value);
      emit(rv.kind, target.text, marked(target.text), rv.uses, rv.text, line);
      return {marked(target.text), {target.text}, target.text};
    }
    auto v = lower_operand(value);
    store_operand(target, v, line);
    return v;
  }

  /// `target op= value` (value null means `op 1`, i.e. ++/--).
  Operand lower_compound(const java::Expr& target, const std::string& op, const java::Expr* value, int line) {
    using K = java::Expr::Kind;
    auto cur = lower_operand(target);
    Operand v = value ? lower_operand(*value) : Operand{"1", {}, ""};
    Rvalue rv{InstrKind::Binary, cur.text + " " + op + " " + v.text, merge(cur.vars, v.vars)};
    if (target.kind == K::Name && is_local(target.text)) {
      emit(rv.kind, target.text, marked(target.text), rv.uses, rv.text, line);
      return {marked(target.text), {target.text}, target.text};
    }
    auto tmp = to_operand(rv, line);
    store_operand(target, tmp, line);
    return tmp;
  }

  void store_operand(const java::Expr& target, const Operand& v, int line) {
    using K = java::Expr::Kind;
    switch (target.kind) {
      case K::Name: {
        if (const auto* f = own_field(target.text)) {
          auto ref = field_ref(*f);
          emit(InstrKind::FieldAccess, ref, ref, v.vars, v.text, line);
          return;
        }
        // Assignment to an undeclared name: keep it as a plain variable.
        emit(InstrKind::Assign, target.text, target.text, v.vars, v.text, line);
        return;
      }
      case K::Field: {
        const auto& obj = *target.kids[0];
        if (obj.kind == K::This) {
          std::string ref = "this.<" + target.text + ">";
          if (const auto* f = own_field(target.text)) ref = field_ref(*f);
          emit(InstrKind::FieldAccess, ref, ref, v.vars, v.text, line);
          return;
        }
        if (is_class_like(obj)) {
          auto ref = "<" + obj.text + ": " + target.text + ">";
          emit(InstrKind::FieldAccess, ref, ref, v.vars, v.text, line);
          return;
        }
        auto o = lower_operand(obj);
        auto ref = o.text + ".<" + target.text + ">";
        emit(InstrKind::FieldAccess, strip_marks(ref), ref, merge(o.vars, v.vars), v.text, line);
        return;
      }
      case K::Index: {
        auto a = lower_operand(*target.kids[0]);
        auto i = lower_operand(*target.kids[1]);
        // Element stores update the array variable weakly: it is both used and defined.
        // A temporary base is never redefined; the store only reads it.
        auto uses = merge(merge(a.vars, i.vars), v.vars);
        auto key = a.key.empty() ? strip_marks(a.text) : a.key;
        if (key.starts_with("$stack")) key.clear();
        emit(InstrKind::ArrayOp, key, a.text + "[" + i.text + "]", uses, v.text, line);
        return;
      }
      default:
        throw LoweringError("invalid assignment target", line);
    }
  }

  void lower_effect(const java::Expr& e) {
    using K = java::Expr::Kind;
    switch (e.kind) {
      case K::Call: {
        auto rv = lower_rvalue(e);
        emit(rv.kind, "", "", rv.uses, rv.text, e.line);
        return;
      }
      case K::Postfix:
        lower_compound(*e.kids[0], e.text.substr(0, 1), nullptr, e.line);
        return;
      case K::Unary:
        if (e.text == "++" || e.text == "--") {
          lower_compound(*e.kids[0], e.text.substr(0, 1), nullptr, e.line);
          return;
        }
        break;
      case K::Assign:
      case K::New:
        lower_rvalue(e);
        return;
      default:
        break;
    }
    lower_operand(e);
  }

  static std::string negated(const std::string& op) {
    if (op == "==") return "!=";
    if (op == "!=") return "==";
    if (op == "<") return ">=";
    if (op == ">=") return "<";
    if (op == ">") return "<=";
    return ">";  // "<="
  }

  /// Emits a conditional branch to `false_label` taken when `cond` is false.
  std::size_t lower_condition(const java::Expr& cond, std::size_t false_label) {
    using K = java::Expr::Kind;
    const auto goto_text = " goto label" + std::to_string(false_label);
    if (cond.kind == K::Binary && (cond.text == "==" || cond.text == "!=" || cond.text == "<" || cond.text == ">" ||
                                   cond.text == "<=" || cond.text == ">=")) {
      auto l = lower_operand(*cond.kids[0]);
      auto r = lower_operand(*cond.kids[1]);
      return emit_jump(false_label, true, merge(l.vars, r.vars),
                       "if " + l.text + " " + negated(cond.text) + " " + r.text + goto_text, cond.line);
    }
    if (cond.kind == K::Unary && cond.text == "!") {
      auto o = lower_operand(*cond.kids[0]);
      return emit_jump(false_label, true, o.vars, "if " + o.text + " != 0" + goto_text, cond.line);
    }
    auto o = lower_operand(cond);
    return emit_jump(false_label, true, o.vars, "if " + o.text + " == 0" + goto_text, cond.line);
  }

  // -- statements -----------------------------------------------------------
  struct Loop {
    std::size_t continue_label, exit_label;
  };

  void with_guard(std::size_t branch, const auto& fn) {
    auto saved = guard_;
    guard_ = branch;
    fn();
    guard_ = saved;
  }

  void lower_stmt(const java::Stmt& s) {
    using K = java::Stmt::Kind;
    switch (s.kind) {
      case K::Block:
        for (const auto& c : s.body) lower_stmt(*c);
        return;
      case K::LocalDecl:
        for (const auto& d : s.decls) {
          if (!d.init) continue;
          java::Expr name{java::Expr::Kind::Name, d.name, {}, d.line};
          lower_store(name, *d.init, d.line);
        }
        return;
      case K::ExprStmt:
        lower_effect(*s.expr);
        return;
      case K::If: {
        const auto else_label = new_label();
        const auto br = lower_condition(*s.expr, else_label);
        const bool has_else = s.body.size() > 1;
        const auto end_label = has_else ? new_label() : else_label;
        with_guard(br, [&] {
          lower_stmt(*s.body[0]);
          if (has_else) emit_jump(end_label, false, {}, "goto label" + std::to_string(end_label), s.line);
        });
        place_label(else_label, s.line);
        if (has_else) {
          with_guard(br, [&] { lower_stmt(*s.body[1]); });
          place_label(end_label, s.line);
        }
        return;
      }
      case K::While: {
        const auto head = new_label(), exit = new_label();
        place_label(head, s.line);
        const auto br = lower_condition(*s.expr, exit);
        loops_.push_back({head, exit});
        with_guard(br, [&] {
          lower_stmt(*s.body[0]);
          emit_jump(head, false, {}, "goto label" + std::to_string(head), s.line);
        });
        loops_.pop_back();
        place_label(exit, s.line);
        return;
      }
      case K::For: {
        for (const auto& i : s.init) lower_stmt(*i);
        const auto head = new_label(), cont = new_label(), exit = new_label();
        place_label(head, s.line);
        std::optional<std::size_t> br;
        if (s.expr) br = lower_condition(*s.expr, exit);
        loops_.push_back({cont, exit});
        auto body = [&] {
          lower_stmt(*s.body[0]);
          place_label(cont, s.line);
          for (const auto& u : s.updates) lower_effect(*u);
          emit_jump(head, false, {}, "goto label" + std::to_string(head), s.line);
        };
        if (br) with_guard(*br, body);
        else body();
        loops_.pop_back();
        place_label(exit, s.line);
        return;
      }
      case K::Return:
      case K::Throw: {
        const std::string word = s.kind == K::Return ? "return" : "throw";
        if (!s.expr) {
          emit(InstrKind::Return, "", "", {}, word, s.line);
          return;
        }
        auto o = lower_operand(*s.expr);
        emit(InstrKind::Return, "", "", o.vars, word + " " + o.text, s.line);
        return;
      }
      case K::Break:
      case K::Continue: {
        if (loops_.empty()) throw LoweringError("jump outside a loop", s.line);
        const auto label = s.kind == K::Break ? loops_.back().exit_label : loops_.back().continue_label;
        emit_jump(label, false, {}, "goto label" + std::to_string(label), s.line);
        return;
      }
      case K::Empty:
        emit(InstrKind::Nop, "", "", {}, "nop", s.line);
        return;
    }
  }

  const java::SourceUnit* unit_;
  const java::MethodDecl& method_;
  std::set<std::string> locals_;
  std::vector<IrInstruction> code_;
  std::map<std::string, Operand> plain_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_jumps_;
  std::map<std::size_t, std::size_t> label_at_;
  std::vector<Loop> loops_;
  std::optional<std::size_t> guard_;
  int temp_counter_ = 0;
  std::size_t label_counter_ = 0;
};

}  // namespace detail

/// Lowers one method. `unit` supplies class context (fields, static methods)
/// and may be null for a free-standing method.
inline IrFunction lower_to_ir(const java::MethodDecl& method, const java::SourceUnit* unit = nullptr) {
  return detail::Lowerer(unit, method).run();
}

/// IR of every method in the class, each introduced by a `method <name>` line.
inline std::string render_class_ir(const java::SourceUnit& unit) {
  std::string out;
  for (const auto& m : unit.methods) {
    out += "method " + m.name + "\n";
    out += render(lower_to_ir(m, &unit));
  }
  return out;
}

}  // namespace warnsift
