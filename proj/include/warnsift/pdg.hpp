#pragma once

// Program dependence graph over IR instructions and warning-aware slicing.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "warnsift/common.hpp"
#include "warnsift/ir.hpp"

namespace warnsift {

using Edge = std::pair<std::size_t, std::size_t>;

struct Dpg {
  std::size_t node_count = 0;
  /// (from, to): `to` reads a value defined at `from` and that definition reaches it.
  std::set<Edge> data_edges;
  /// (from, to): `to` executes only depending on the outcome of branch `from`.
  std::set<Edge> control_edges;
};

/// Control-flow successors of instruction `i`.
inline std::vector<std::size_t> successors(const IrFunction& f, std::size_t i) {
  const auto& ins = f.instructions[i];
  const std::size_t n = f.instructions.size();
  std::vector<std::size_t> out;
  if (ins.kind == InstrKind::Return) return out;
  if (ins.kind == InstrKind::Branch) {
    if (ins.conditional && i + 1 < n) out.push_back(i + 1);
    if (ins.jump_target) {
      if (*ins.jump_target >= n) throw Error("branch target out of range");
      if (std::find(out.begin(), out.end(), *ins.jump_target) == out.end()) out.push_back(*ins.jump_target);
    }
    return out;
  }
  if (i + 1 < n) out.push_back(i + 1);
  return out;
}

/// Data edges from iterative reaching definitions over the instruction CFG;
/// control edges from the structural guard recorded at lowering time.
inline Dpg build_pdg(const IrFunction& f) {
  const std::size_t n = f.instructions.size();
  Dpg g;
  g.node_count = n;

  // Bit sets over definition sites (instruction indices).
  const std::size_t words = (n + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  std::map<std::string, Bits> defs_of;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : f.instructions[i].defs) {
      auto& b = defs_of.try_emplace(v, Bits(words, 0)).first->second;
      b[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto s : successors(f, i)) preds[s].push_back(i);
  }

  std::vector<Bits> in(n, Bits(words, 0)), out(n, Bits(words, 0));
  auto transfer = [&](std::size_t i) {
    Bits res = in[i];
    for (const auto& v : f.instructions[i].defs) {
      const auto& kill = defs_of.at(v);
      for (std::size_t w = 0; w < words; ++w) res[w] &= ~kill[w];
      res[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return res;
  };
  std::deque<std::size_t> work;
  std::vector<bool> queued(n, true);
  for (std::size_t i = 0; i < n; ++i) work.push_back(i);
  while (!work.empty()) {
    const auto i = work.front();
    work.pop_front();
    queued[i] = false;
    Bits merged(words, 0);
    for (auto p : preds[i]) {
      for (std::size_t w = 0; w < words; ++w) merged[w] |= out[p][w];
    }
    in[i] = std::move(merged);
    auto res = transfer(i);
    if (res != out[i]) {
      out[i] = std::move(res);
      for (auto s : successors(f, i)) {
        if (!queued[s]) {
          queued[s] = true;
          work.push_back(s);
        }
      }
    }
  }

  for (std::size_t b = 0; b < n; ++b) {
    for (const auto& v : f.instructions[b].uses) {
      auto it = defs_of.find(v);
      if (it == defs_of.end()) continue;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t live = in[b][w] & it->second[w];
        while (live) {
          const auto bit = static_cast<std::size_t>(__builtin_ctzll(live));
          g.data_edges.emplace(w * 64 + bit, b);
          live &= live - 1;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (const auto& p = f.instructions[i].control_parent) {
      if (*p >= n) throw Error("control parent out of range");
      g.control_edges.emplace(*p, i);
    }
  }
  return g;
}

/// Instructions whose source line is one of `lines`.
inline std::vector<std::size_t> criterion_instructions(const IrFunction& f, const std::set<int>& lines) {
  std::vector<std::size_t> out;
  for (const auto& ins : f.instructions) {
    if (lines.contains(ins.source_line)) out.push_back(ins.index);
  }
  return out;
}

/// Criterion instructions plus everything they transitively depend on
/// (backward) and everything transitively depending on them (forward), over
/// both data and control edges. Sorted by instruction index. Empty when no
/// instruction lies on the criterion lines.
inline std::vector<std::size_t> slice_indices(const Dpg& g, const IrFunction& f, const std::set<int>& criterion_lines) {
  if (criterion_lines.empty()) throw Error("warning_aware_slice: empty slicing criterion");
  const std::size_t n = g.node_count;
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  for (const auto* edges : {&g.data_edges, &g.control_edges}) {
    for (auto [a, b] : *edges) {
      fwd[a].push_back(b);
      bwd[b].push_back(a);
    }
  }
  const auto seeds = criterion_instructions(f, criterion_lines);
  std::vector<bool> in_slice(n, false);
  for (const auto* adj : {&bwd, &fwd}) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack(seeds.begin(), seeds.end());
    for (auto s : seeds) seen[s] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      in_slice[v] = true;
      for (auto w : (*adj)[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_slice[i]) out.push_back(i);
  }
  return out;
}

/// Rendered slice, one instruction per line in program order.
inline std::string warning_aware_slice(const Dpg& g, const IrFunction& f, const std::set<int>& criterion_lines) {
  std::string out;
  for (auto i : slice_indices(g, f, criterion_lines)) {
    out += f.instructions[i].render;
    out += '\n';
  }
  return out;
}

}  // namespace warnsift
