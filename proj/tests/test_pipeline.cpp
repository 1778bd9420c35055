#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "warnsift/pipeline.hpp"
#include "test_util.hpp"

using namespace warnsift;
namespace fs = std::filesystem;

namespace {

const fs::path kData = WARNSIFT_DATA;
const std::string kCli = WARNSIFT_CLI;

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

/// Files under `root`, relative path -> bytes.
std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).generic_string()] = test::read(e.path());
  }
  return out;
}

/// An untrained model whose vocabulary covers the HTTP sender fixture.
TrainedModel fixture_model(std::uint64_t seed) {
  const auto report = parse_report(test::read(test::fixture("HttpRequestSender.xml")));
  std::vector<LabeledWarning> corpus;
  std::vector<std::vector<std::string>> streams;
  SourceCache cache;
  for (const auto& w : report.records) {
    corpus.push_back({w, Label::Insensitive, {}});
    const auto r = cache.context_for(test::fixture("src") / w.source_path, w);
    for (auto& s : channel_tokens(r.context, w)) streams.push_back(std::move(s));
  }
  TrainedModel m;
  m.config.embed_dim = m.config.hidden_dim = m.config.attr_dim = 6;
  m.vocab = Vocabulary::build(streams);
  m.rules = RuleIds::build(corpus);
  std::mt19937_64 rng(seed);
  m.params = ModelParams::init({m.vocab.size(), m.rules.size(), 6, 6, 6}, rng);
  return m;
}

}  // namespace

TEST(Cli, UnknownFlagAndMissingSubcommandExitTwo) {
  const auto dir = test::scratch("cli_flags");
  EXPECT_EQ(test::run(kCli + " build-dataset --bogus", dir / "log"), 2);
  EXPECT_EQ(test::run(kCli, dir / "log"), 2);
  EXPECT_EQ(test::run(kCli + " eval --model /nonexistent --data /nonexistent", dir / "log"), 2);
  EXPECT_EQ(test::run(kCli + " --help", dir / "log"), 0);
}

TEST(Cli, BuildTrainEvalFilterOnTheMiniCorpus) {
  const auto dir = test::scratch("cli_e2e");
  const auto corpus = dir / "corpus.jsonl";
  ASSERT_EQ(test::run(kCli + " build-dataset --pairs " + q(kData / "minicorpus/manifest.json") + " --out " + q(corpus) +
                          " --seed 11 --json",
                      dir / "build.json"),
            0)
      << test::read(dir / "build.json");
  const auto summary = nlohmann::json::parse(test::read(dir / "build.json"));
  EXPECT_GE(summary["corpus"].get<int>(), 300);
  EXPECT_EQ(summary["train"].get<int>() + summary["validation"].get<int>() + summary["test"].get<int>(),
            summary["corpus"].get<int>());
  for (const char* s : {"train", "valid", "test"}) EXPECT_TRUE(fs::exists(split_path(corpus, s))) << s;
  EXPECT_TRUE(fs::is_directory(dir / "sources"));

  // a short run: this checks the plumbing, the acceptance binary checks quality
  auto cfg = load_config((kData / "minicorpus.cfg").string());
  cfg.max_epochs = 2;
  write_file(dir / "short.cfg", format_config(cfg));
  const auto ckpt = dir / "model.ckpt";
  ASSERT_EQ(test::run(kCli + " train --json --config " + q(dir / "short.cfg") + " --data " +
                          q(split_path(corpus, "train")) + " --out " + q(ckpt),
                      dir / "train.json"),
            0)
      << test::read(dir / "train.json");
  const auto hist = nlohmann::json::parse(test::read(dir / "train.json"));
  EXPECT_EQ(hist["history"].size(), 2u);
  EXPECT_TRUE(fs::exists(vocab_path(ckpt)));

  ASSERT_EQ(test::run(kCli + " eval --json --model " + q(ckpt) + " --data " + q(split_path(corpus, "test")),
                      dir / "eval.json"),
            0);
  const auto ev = nlohmann::json::parse(test::read(dir / "eval.json"));
  EXPECT_EQ(ev["samples"].get<int>(), summary["test"].get<int>());
  EXPECT_EQ(ev["baselines"]["all_negative"]["sensitive"]["recall"].get<double>(), 0.0);
  EXPECT_EQ(ev["baselines"]["all_positive"]["sensitive"]["recall"].get<double>(), 100.0);

  const auto filter_cmd = kCli + " filter --model " + q(ckpt) + " --report " +
                          q(kData / "minicorpus/filter/report.xml") + " --src " + q(kData / "minicorpus/filter/src");
  ASSERT_EQ(test::run(filter_cmd + " --threshold 0.01", dir / "filter.jsonl"), 0);
  std::istringstream lines(test::read(dir / "filter.jsonl"));
  std::string line;
  double prev = 2.0;
  std::size_t kept = 0;
  while (std::getline(lines, line)) {
    if (line.starts_with("retained")) continue;  // stderr summary
    const auto j = nlohmann::json::parse(line);
    EXPECT_LE(j["score"].get<double>(), prev);
    EXPECT_GT(j["score"].get<double>(), 0.01);
    prev = j["score"].get<double>();
    ++kept;
  }
  EXPECT_LE(kept, 17u);

  EXPECT_EQ(test::run(kCli + " eval --model " + q(ckpt) + " --data " + q(dir / "build.json"), dir / "log"), 1);
}

TEST(MiniCorpus, RegenerationIsByteIdentical) {
  const auto dir = test::scratch("minicorpus_regen");
  ASSERT_EQ(test::run(std::string(WARNSIFT_MINICORPUS_GEN) + " " + q(WARNSIFT_FIXTURES) + " " + q(dir / "minicorpus"),
                      dir / "log"),
            0)
      << test::read(dir / "log");
  const auto fresh = tree(dir / "minicorpus"), bundled = tree(kData / "minicorpus");
  ASSERT_EQ(fresh.size(), bundled.size());
  for (const auto& [path, bytes] : bundled) {
    auto it = fresh.find(path);
    ASSERT_NE(it, fresh.end()) << path;
    EXPECT_EQ(it->second, bytes) << path;
  }
}

TEST(Filter, StrictSubsetSortedAndMonotoneInThreshold) {
  const auto model = fixture_model(5);
  const auto report = parse_report(test::read(kData / "minicorpus/filter/report.xml")).records;
  const auto src = kData / "minicorpus/filter/src";
  const auto all = filter_report(report, model, src, 1e-12);
  ASSERT_EQ(all.size(), report.size());
  std::vector<double> scores;
  for (const auto& s : all) scores.push_back(s.score);
  std::sort(scores.begin(), scores.end());
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GE(all[i - 1].score, all[i].score);
  // a threshold between two distinct scores keeps exactly those above it
  const double mid = (scores.front() + scores.back()) / 2;
  ASSERT_LT(scores.front(), scores.back());
  const auto some = filter_report(report, model, src, mid);
  EXPECT_LT(some.size(), report.size());
  for (const auto& s : some) EXPECT_GT(s.score, mid);
  std::size_t expected = 0;
  for (double v : scores) expected += v > mid;
  EXPECT_EQ(some.size(), expected);
  std::size_t prev = report.size() + 1;
  for (double d : {1e-12, 0.2, 0.4, 0.5, 0.6, 0.8, 1 - 1e-12}) {
    const auto kept = filter_report(report, model, src, d);
    EXPECT_LE(kept.size(), prev);
    prev = kept.size();
  }
  EXPECT_THROW(filter_report(report, model, src, 1.0), Error);
  EXPECT_TRUE(filter_report({}, model, src, 0.5).empty());
}

TEST(Filter, HttpSenderWarningsScoreIndependently) {
  const auto model = fixture_model(8);
  const auto report = parse_report(test::read(test::fixture("HttpRequestSender.xml"))).records;
  ASSERT_EQ(report.size(), 2u);
  const auto kept = filter_report(report, model, test::fixture("src"), 1e-12);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_FALSE(kept[0].fallback);
  EXPECT_FALSE(kept[1].fallback);
  // same rule, method and message; only the slices differ
  EXPECT_NE(kept[0].score, kept[1].score);
  // a missing source degrades to the fallback context rather than failing
  const auto missing = filter_report(report, model, test::scratch("no_sources"), 1e-12);
  ASSERT_EQ(missing.size(), 2u);
  EXPECT_TRUE(missing[0].fallback);
}

TEST(Fit, VocabularyComesFromTheTrainingSplitOnly) {
  const auto report = parse_report(test::read(test::fixture("HttpRequestSender.xml"))).records;
  SourceCache cache;
  auto sample = [&](const WarningRecord& w, Label l) {
    auto r = cache.context_for(test::fixture("src") / w.source_path, w);
    return PreparedSample{{w, l, {}}, r.context, r.fallback};
  };
  std::vector<PreparedSample> tr = {sample(report[0], Label::Sensitive), sample(report[1], Label::Insensitive)};
  auto held = sample(report[1], Label::Sensitive);
  held.entry.warning.message = "zzheldout zzheldout";
  held.entry.warning.rule = "HELD_OUT_RULE";
  ModelConfig cfg;
  cfg.embed_dim = cfg.hidden_dim = cfg.attr_dim = 4;
  cfg.max_epochs = 1;
  cfg.batch_size = 2;
  const auto [m, res] = fit(tr, {held}, cfg);
  EXPECT_FALSE(m.vocab.contains("zzheldout"));
  EXPECT_EQ(m.rules.id("HELD_OUT_RULE"), 0);
  EXPECT_EQ(m.vocab, build_vocab(tr, cfg.vocab_size));
  EXPECT_EQ(res.history.size(), 1u);
}
