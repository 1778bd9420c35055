#include <gtest/gtest.h>

#include <random>

#include "warnsift/pdg.hpp"
#include "warnsift/java/parser.hpp"
#include "ir_oracle.hpp"
#include "test_util.hpp"

using namespace warnsift;
using test::instr;
using test::oracle_data_edges;
using test::oracle_slice;
using test::random_function;

namespace {

// a=input; b=a+1; c=2; print(b)
IrFunction straight_line() {
  IrFunction f;
  f.instructions = {instr(0, {"a"}, {}), instr(1, {"b"}, {"a"}), instr(2, {"c"}, {}), instr(3, {}, {"b"})};
  return f;
}

}  // namespace

TEST(Pdg, StraightLineDataEdges) {
  const auto g = build_pdg(straight_line());
  EXPECT_EQ(g.data_edges, (std::set<Edge>{{0, 1}, {1, 3}}));
  EXPECT_TRUE(g.control_edges.empty());
}

TEST(Pdg, SingleInstructionHasNoEdges) {
  IrFunction f;
  f.instructions = {instr(0, {"x"}, {"x"})};
  const auto g = build_pdg(f);
  EXPECT_TRUE(g.data_edges.empty());
  EXPECT_TRUE(g.control_edges.empty());
}

TEST(Pdg, IfBranchGuardsAssignment) {
  const auto u = java::parse_java_subset("class T {\n int m(int a) {\n int x = 0;\n if (a > 0) {\n x = 2;\n }\n return x;\n }\n}");
  const auto f = lower_to_ir(u.methods[0], &u);
  const auto g = build_pdg(f);
  std::size_t branch = 0, assign = 0, init = 0;
  for (const auto& i : f.instructions) {
    if (i.kind == InstrKind::Branch) branch = i.index;
    if (i.source_line == 3) init = i.index;
    if (i.source_line == 5) assign = i.index;
  }
  ASSERT_GT(assign, branch);
  EXPECT_EQ(g.control_edges, (std::set<Edge>{{branch, assign}}));
  // both definitions of x reach the return
  const auto ret = f.instructions.size() - 1;
  EXPECT_TRUE(g.data_edges.contains({assign, ret}));
  EXPECT_TRUE(g.data_edges.contains({init, ret}));
}

TEST(Pdg, LoopCarriedDefinitionReachesHeader) {
  const auto u = java::parse_java_subset("class T {\n int m(int n) {\n int i = 0;\n while (i < n) {\n i = i + 1;\n }\n return i;\n }\n}");
  const auto f = lower_to_ir(u.methods[0], &u);
  const auto g = build_pdg(f);
  std::size_t inc = 0;
  for (const auto& i : f.instructions) {
    if (i.source_line == 5 && !i.defs.empty()) inc = i.index;
  }
  EXPECT_TRUE(g.data_edges.contains({inc, inc}));  // i = i + 1 reads its previous iteration
}

TEST(Slice, StraightLineExcludesUnrelated) {
  const auto f = straight_line();
  const auto g = build_pdg(f);
  EXPECT_EQ(slice_indices(g, f, {4}), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_EQ(warning_aware_slice(g, f, {4}), "i0\ni1\ni3\n");
}

TEST(Slice, IsolatedCriterionIsAlone) {
  const auto f = straight_line();
  EXPECT_EQ(slice_indices(build_pdg(f), f, {3}), (std::vector<std::size_t>{2}));
}

TEST(Slice, ForwardReachesAllReaders) {
  IrFunction f;
  f.instructions = {instr(0, {"a"}, {}), instr(1, {"b"}, {"a"}), instr(2, {"c"}, {}), instr(3, {"d"}, {"a"}), instr(4, {}, {"d"})};
  EXPECT_EQ(slice_indices(build_pdg(f), f, {1}), (std::vector<std::size_t>{0, 1, 3, 4}));
}

TEST(Slice, EmptyCriterionIsAnError) {
  const auto f = straight_line();
  EXPECT_THROW(slice_indices(build_pdg(f), f, {}), Error);
  EXPECT_TRUE(slice_indices(build_pdg(f), f, {99}).empty());
}

TEST(Slice, HttpSenderSlicesDifferBetweenWarnings) {
  const auto u = java::parse_java_subset(test::read(test::fixture("src/io/dongtai/HttpRequestSender.java")));
  const auto f = lower_to_ir(u.methods[0], &u);
  const auto g = build_pdg(f);
  const auto s5 = warning_aware_slice(g, f, {5});
  const auto s13 = warning_aware_slice(g, f, {13});
  EXPECT_NE(s5, s13);
  EXPECT_NE(s5.find("lengthof"), std::string::npos);
  EXPECT_NE(s5.find("<setRequestProperty>"), std::string::npos);
  EXPECT_EQ(s5.find("BufferedReader"), std::string::npos);
  EXPECT_NE(s13.find("new InputStreamReader"), std::string::npos);
  EXPECT_EQ(s13.find("<getBytes>"), std::string::npos);
}

TEST(PdgProperty, DataEdgesMatchPathOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_function(rng);
    const auto g = build_pdg(f);
    ASSERT_EQ(g.data_edges, oracle_data_edges(f)) << "trial " << trial;
    for (auto [a, b] : g.data_edges) {
      bool shared = false;
      for (const auto& v : f.instructions[a].defs) shared = shared || f.instructions[b].uses.contains(v);
      ASSERT_TRUE(shared);
    }
    std::set<Edge> control;
    for (const auto& i : f.instructions) {
      if (i.control_parent) control.emplace(*i.control_parent, i.index);
    }
    ASSERT_EQ(g.control_edges, control);
  }
}

TEST(PdgProperty, SliceMatchesClosureOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_function(rng);
    const auto g = build_pdg(f);
    std::set<int> lines;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) lines.insert(static_cast<int>(1 + rng() % 10));
    ASSERT_EQ(slice_indices(g, f, lines), oracle_slice(g, f, lines)) << "trial " << trial;
  }
}

TEST(PdgProperty, SliceIsMonotoneInCriterion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_function(rng);
    const auto g = build_pdg(f);
    std::set<int> small = {static_cast<int>(1 + rng() % 10)};
    std::set<int> big = small;
    big.insert(static_cast<int>(1 + rng() % 10));
    const auto a = slice_indices(g, f, small), b = slice_indices(g, f, big);
    ASSERT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}
