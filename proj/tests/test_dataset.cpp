#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <random>
#include <sstream>

#include "warnsift/dataset.hpp"

using namespace warnsift;

namespace {

WarningRecord warn(const std::string& rule, const std::string& path, const std::string& msg = "m", int line = 3) {
  WarningRecord w;
  w.rule = rule;
  w.category = Category::Correctness;
  w.rank = 5;
  w.confidence = 1;
  w.message = msg;
  w.class_name = "C";
  w.method_name = "f";
  w.source_path = path;
  w.line_start = line;
  w.line_end = line;
  return w;
}

LabeledWarning entry(const WarningRecord& w, Label l, const std::string& commit) { return {w, l, {"repo", commit}}; }

std::vector<LabeledWarning> random_corpus(std::mt19937_64& rng, std::size_t n) {
  std::vector<LabeledWarning> c;
  for (std::size_t i = 0; i < n; ++i) {
    auto w = warn("R" + std::to_string(rng() % 4), "F" + std::to_string(rng() % 3) + ".java",
                  "msg " + std::to_string(rng() % 100), static_cast<int>(1 + rng() % 50));
    c.push_back(entry(w, rng() % 4 == 0 ? Label::Sensitive : Label::Insensitive, "c" + std::to_string(rng() % 3)));
  }
  return c;
}

}  // namespace

TEST(BugfixFilter, Examples) {
  EXPECT_TRUE(is_bugfix_commit("fix null pointer dereference in parser"));
  EXPECT_FALSE(is_bugfix_commit("refactor: rename variables"));
  EXPECT_FALSE(is_bugfix_commit("fix typo in README"));
}

TEST(BugfixFilter, WordForms) {
  EXPECT_TRUE(is_bugfix_commit("Fixed a bug in the scheduler"));
  EXPECT_TRUE(is_bugfix_commit("BUGFIX: crash on start"));  // "bugfix" carries both parts
  EXPECT_TRUE(is_bugfix_commit("Hotfix for errors in rate limiter"));
  EXPECT_TRUE(is_bugfix_commit("fixes Issue #12"));
  EXPECT_TRUE(is_bugfix_commit("fix resource leak in reader"));
  EXPECT_FALSE(is_bugfix_commit("prefix every error with a tag"));  // "prefix" is not a fix
  EXPECT_FALSE(is_bugfix_commit("fix-up formatting"));
  EXPECT_TRUE(is_bugfix_commit("fix race condition", {"race condition"}));
  EXPECT_FALSE(is_bugfix_commit("fix race condition", {}));
}

TEST(LabelWarnings, DisappearingWarningIsSensitive) {
  const auto w = warn("NP", "A.java");
  const auto out = label_warnings({w}, {}, {"A.java"});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].label, Label::Sensitive);
}

TEST(LabelWarnings, PersistingWarningIsInsensitive) {
  auto moved = warn("NP", "A.java", "m", 9);  // same warning, shifted by the fix
  const auto out = label_warnings({warn("NP", "A.java")}, {moved}, {"A.java"});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].label, Label::Insensitive);
}

TEST(LabelWarnings, UnchangedFilesAndNoiseAreExcluded) {
  auto noise = warn("N", "A.java");
  noise.category = Category::Noise;
  const auto out = label_warnings({warn("NP", "B.java"), noise}, {}, {"A.java"});
  EXPECT_TRUE(out.empty());
  EXPECT_THROW(label_warnings({}, {}, {}), Error);
}

TEST(Promotion, SensitiveAnywhereIsSensitiveEverywhere) {
  const auto w = warn("NP", "A.java");
  const auto out = promote_labels({entry(w, Label::Sensitive, "a"), entry(w, Label::Insensitive, "b")});
  EXPECT_EQ(out[0].label, Label::Sensitive);
  EXPECT_EQ(out[1].label, Label::Sensitive);
}

TEST(Promotion, NoConflictLeavesCorpusUnchanged) {
  const std::vector<LabeledWarning> c = {entry(warn("A", "x"), Label::Insensitive, "a"),
                                         entry(warn("B", "x"), Label::Sensitive, "a")};
  EXPECT_EQ(promote_labels(c), c);
}

TEST(Promotion, ThreeEntriesOneSensitive) {
  const auto w = warn("NP", "A.java");
  const auto out = promote_labels({entry(w, Label::Insensitive, "a"), entry(w, Label::Sensitive, "b"),
                                   entry(warn("NP", "A.java", "m", 40), Label::Insensitive, "c")});
  for (const auto& e : out) EXPECT_EQ(e.label, Label::Sensitive);
}

TEST(Dedup, Examples) {
  const auto w = warn("X", "A.java");
  EXPECT_EQ(dedup({entry(w, Label::Insensitive, "a"), entry(w, Label::Insensitive, "b")}).size(), 1u);
  EXPECT_EQ(dedup({entry(w, Label::Sensitive, "a"), entry(w, Label::Sensitive, "b")}).size(), 2u);
  EXPECT_TRUE(dedup({}).empty());
  const auto kept = dedup({entry(w, Label::Insensitive, "first"), entry(w, Label::Insensitive, "second")});
  EXPECT_EQ(kept[0].provenance.commit, "first");
}

// Fixture commit pairs with the expected corpus written out by hand.
TEST(DatasetRules, FixtureCommitPairsGiveExpectedCorpus) {
  const auto np = warn("NP_NULL", "src/A.java", "null deref of x", 10);
  const auto enc = warn("DM_DEFAULT_ENCODING", "src/A.java", "encoding at 12", 12);
  const auto dls = warn("DLS", "src/B.java", "dead store", 4);
  const auto other = warn("SE", "src/Untouched.java", "serial", 1);

  // Pair 1 fixes np; enc and dls persist (lines shift); Untouched is not in the diff.
  auto enc_shift = enc;
  enc_shift.line_start = enc_shift.line_end = 14;
  enc_shift.message = "encoding at 14";
  const auto p1 = label_warnings({np, enc, dls, other}, {enc_shift, dls, other}, {"src/A.java", "src/B.java"},
                                 {"repo", "c1"});
  // Pair 2 (older commit) still has np and it persists there; enc persists again.
  const auto p2 = label_warnings({np, enc}, {np, enc}, {"src/A.java"}, {"repo", "c2"});
  // Pair 3 fixes dls.
  const auto p3 = label_warnings({dls}, {}, {"src/B.java"}, {"repo", "c3"});

  std::vector<LabeledWarning> all = p1;
  all.insert(all.end(), p2.begin(), p2.end());
  all.insert(all.end(), p3.begin(), p3.end());
  const auto corpus = dedup(promote_labels(all));

  const std::vector<LabeledWarning> expected = {
      {np, Label::Sensitive, {"repo", "c1"}},     // disappears in the fixed version
      {enc, Label::Insensitive, {"repo", "c1"}},  // first insensitive occurrence kept
      {dls, Label::Sensitive, {"repo", "c1"}},    // promoted: fixed in c3
      {np, Label::Sensitive, {"repo", "c2"}},     // promoted from c1, kept per provenance
      {dls, Label::Sensitive, {"repo", "c3"}},
  };
  EXPECT_EQ(corpus, expected);
}

TEST(Split, HundredEntries) {
  std::vector<LabeledWarning> c;
  for (int i = 0; i < 100; ++i) c.push_back(entry(warn("R", "F", std::to_string(i)), i % 5 ? Label::Insensitive : Label::Sensitive, "c"));
  const auto s = split(c, 3);
  EXPECT_EQ(s.train.size(), 80u);
  EXPECT_EQ(s.validation.size(), 10u);
  EXPECT_EQ(s.test.size(), 10u);
}

TEST(Split, DeterministicForSeed) {
  std::mt19937_64 rng(5);
  const auto c = random_corpus(rng, 57);
  const auto a = split(c, 9), b = split(c, 9);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.validation, b.validation);
  EXPECT_EQ(a.test, b.test);
}

TEST(Split, StratifiedUnderImbalance) {
  std::vector<LabeledWarning> c;
  for (int i = 0; i < 160; ++i) c.push_back(entry(warn("R", "F", "m" + std::string(static_cast<std::size_t>(i % 7), 'x')), i % 16 == 0 ? Label::Sensitive : Label::Insensitive, std::to_string(i)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = split(c, seed);
    for (const auto* part : {&s.train, &s.validation, &s.test}) {
      EXPECT_TRUE(std::any_of(part->begin(), part->end(), [](const auto& e) { return e.label == Label::Sensitive; }));
    }
  }
}

TEST(Split, RejectsTinyCorpus) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(split(random_corpus(rng, 9), 1), Error);
}

TEST(DatasetProperty, PromotionDedupAndSplitInvariants) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto raw = random_corpus(rng, 10 + rng() % 60);
    const auto promoted = promote_labels(raw);
    // Oracle: group by fingerprint, sensitive if any member is.
    std::map<std::tuple<std::string, std::string, std::string>, bool> any_sensitive;
    for (const auto& e : raw) {
      auto key = std::make_tuple(e.warning.rule, e.warning.source_path, normalize_digits(e.warning.message));
      any_sensitive[key] = any_sensitive[key] || e.label == Label::Sensitive;
    }
    for (const auto& e : promoted) {
      auto key = std::make_tuple(e.warning.rule, e.warning.source_path, normalize_digits(e.warning.message));
      ASSERT_EQ(e.label == Label::Sensitive, any_sensitive[key]);
    }
    const auto deduped = dedup(promoted);
    const auto count_sensitive = [](const auto& c) {
      return std::count_if(c.begin(), c.end(), [](const auto& e) { return e.label == Label::Sensitive; });
    };
    // dedup never drops a sensitive entry of a distinct (fingerprint, provenance)
    std::set<std::pair<Provenance, WarningFingerprint>> sens_keys;
    std::set<WarningFingerprint> insens;
    for (const auto& e : promoted) {
      if (e.label == Label::Sensitive) sens_keys.emplace(e.provenance, fingerprint(e.warning));
    }
    ASSERT_EQ(static_cast<std::size_t>(count_sensitive(deduped)), sens_keys.size());
    for (const auto& e : deduped) {
      if (e.label == Label::Insensitive) ASSERT_TRUE(insens.insert(fingerprint(e.warning)).second);
    }
    if (deduped.size() >= 10) {
      const auto s = split(deduped, trial);
      std::vector<LabeledWarning> joined = s.train;
      joined.insert(joined.end(), s.validation.begin(), s.validation.end());
      joined.insert(joined.end(), s.test.begin(), s.test.end());
      ASSERT_EQ(joined.size(), deduped.size());
      auto key = [](const LabeledWarning& e) { return std::make_pair(e.provenance, fingerprint(e.warning)); };
      std::vector<std::pair<Provenance, WarningFingerprint>> a, b;
      for (const auto& e : joined) a.push_back(key(e));
      for (const auto& e : deduped) b.push_back(key(e));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ASSERT_EQ(a, b);
      const auto n = deduped.size();
      const double tenth = static_cast<double>(n) / 10.0;
      ASSERT_LE(std::abs(static_cast<double>(s.validation.size()) - tenth), 1.0);
      ASSERT_LE(std::abs(static_cast<double>(s.test.size()) - tenth), 1.0);
    }
  }
}

TEST(DatasetProperty, LabelOutputIsSubsetOfChangedFiles) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<WarningRecord> buggy, fixed;
    for (int i = 0; i < 12; ++i) {
      auto w = warn("R" + std::to_string(rng() % 3), "F" + std::to_string(rng() % 4), "m" + std::to_string(rng() % 3));
      buggy.push_back(w);
      if (rng() % 2) fixed.push_back(w);
    }
    const std::set<std::string> changed = {"F0", "F2"};
    const auto out = label_warnings(buggy, fixed, changed);
    std::size_t expected = 0;
    for (const auto& w : buggy) expected += changed.contains(w.source_path);
    ASSERT_EQ(out.size(), expected);
    for (const auto& e : out) {
      ASSERT_TRUE(changed.contains(e.warning.source_path));
      const bool persists = std::any_of(fixed.begin(), fixed.end(), [&](const auto& f) { return fingerprint(f) == fingerprint(e.warning); });
      ASSERT_EQ(e.label == Label::Sensitive, !persists);
    }
  }
}

TEST(CorpusJson, ExactFieldOrderAndNulls) {
  auto w = warn("R", "a/B.java");
  w.method_name.reset();
  w.line_start.reset();
  w.line_end.reset();
  const auto j = to_json({w, Label::Sensitive, {"r1", "abc"}});
  EXPECT_EQ(j.dump(),
            R"({"rule":"R","category":"CORRECTNESS","rank":5,"confidence":1,"message":"m","class_name":"C",)"
            R"("method_name":null,"source_path":"a/B.java","line_start":null,"line_end":null,)"
            R"("label":"sensitive","repo_id":"r1","commit":"abc"})");
}

TEST(CorpusJson, RoundTripAndErrors) {
  std::mt19937_64 rng(8);
  const auto c = random_corpus(rng, 40);
  std::stringstream ss;
  write_corpus(ss, c);
  EXPECT_EQ(read_corpus(ss), c);
  std::stringstream bad("{\"rule\":1}\n");
  EXPECT_THROW(read_corpus(bad), Error);
  std::stringstream garbage("\n{not json\n");
  try {
    read_corpus(garbage);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), 2u);
  }
}
