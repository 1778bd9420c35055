#pragma once

// Warning-aware code context: the located function, the class fields and the
// sliced IR around the warned lines.

#include <set>
#include <string>
#include <vector>

#include "warnsift/ir.hpp"
#include "warnsift/java/ast.hpp"
#include "warnsift/java/parser.hpp"
#include "warnsift/pdg.hpp"
#include "warnsift/report.hpp"

namespace warnsift {

/// Token that stands in for an empty channel.
inline constexpr std::string_view kEmptyMarker = "<empty>";

struct LocatedFunction {
  bool whole_class = true;
  std::vector<std::size_t> methods;  // indices into SourceUnit::methods
  bool by_lines = false;             // located through the reported lines

  bool operator==(const LocatedFunction&) const = default;
};

/// Source lines named by a warning, or empty if it carries none.
inline std::set<int> warning_lines(const WarningRecord& w) {
  std::set<int> lines;
  if (!w.line_start) return lines;
  const int last = w.line_end.value_or(*w.line_start);
  for (int l = *w.line_start; l <= last; ++l) lines.insert(l);
  return lines;
}

/// With lines: the unique method whose span holds them, else the whole
/// class. Without lines but with a method name: every method of that name.
/// Otherwise the whole class.
inline LocatedFunction locate_function(const java::SourceUnit& unit, const WarningRecord& w) {
  LocatedFunction r;
  const auto lines = warning_lines(w);
  if (!lines.empty()) {
    std::set<std::size_t> hit;
    for (std::size_t i = 0; i < unit.methods.size(); ++i) {
      const auto& m = unit.methods[i];
      for (int l : lines) {
        if (l >= m.line_start && l <= m.line_end) hit.insert(i);
      }
    }
    if (hit.size() == 1) {
      r.whole_class = false;
      r.by_lines = true;
      r.methods.assign(hit.begin(), hit.end());
    }
    return r;
  }
  if (w.method_name) {
    for (std::size_t i = 0; i < unit.methods.size(); ++i) {
      if (unit.methods[i].name == *w.method_name) r.methods.push_back(i);
    }
    r.whole_class = r.methods.empty();
  }
  return r;
}

/// Field declarations in source order, each declaration statement once.
inline std::string extract_fields(const java::SourceUnit& unit) {
  std::string out;
  const java::FieldDecl* prev = nullptr;
  for (const auto& f : unit.fields) {
    if (prev && prev->decl_offset == f.decl_offset) continue;
    if (!out.empty()) out += '\n';
    out += f.text;
    prev = &f;
  }
  return out.empty() ? std::string(kEmptyMarker) : out;
}

struct CodeContext {
  std::string function_text;
  std::string field_text;
  std::string slice_text;

  bool operator==(const CodeContext&) const = default;
};

inline CodeContext build_context(const java::SourceUnit& unit, const WarningRecord& w) {
  CodeContext ctx;
  ctx.field_text = extract_fields(unit);
  const auto located = locate_function(unit, w);
  if (located.whole_class) {
    ctx.function_text = unit.class_text;
    ctx.slice_text = render_class_ir(unit);
  } else {
    for (auto i : located.methods) {
      if (!ctx.function_text.empty()) ctx.function_text += '\n';
      ctx.function_text += unit.methods[i].text;
    }
    if (located.by_lines) {
      const auto f = lower_to_ir(unit.methods[located.methods.front()], &unit);
      const auto g = build_pdg(f);
      ctx.slice_text = warning_aware_slice(g, f, warning_lines(w));
      if (ctx.slice_text.empty()) ctx.slice_text = render_class_ir(unit);
    } else {
      for (auto i : located.methods) ctx.slice_text += render(lower_to_ir(unit.methods[i], &unit));
    }
  }
  if (ctx.function_text.empty()) ctx.function_text = kEmptyMarker;
  if (ctx.slice_text.empty()) ctx.slice_text = kEmptyMarker;
  return ctx;
}

/// Context for a warning whose source could not be parsed or found: the raw
/// file text (possibly empty) fills the code channels.
inline CodeContext fallback_context(const std::string& raw_source) {
  CodeContext ctx;
  ctx.function_text = raw_source.empty() ? std::string(kEmptyMarker) : raw_source;
  ctx.field_text = kEmptyMarker;
  ctx.slice_text = ctx.function_text;
  return ctx;
}

}  // namespace warnsift
