#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "warnsift/pipeline.hpp"
#include "model_util.hpp"
#include "test_util.hpp"

using namespace warnsift;

namespace {

std::string checkpoint_bytes(const ModelConfig& cfg, const ModelParams& p) {
  std::ostringstream os(std::ios::binary);
  write_checkpoint(os, cfg, p);
  return os.str();
}

Checkpoint from_bytes(const std::string& bytes) {
  std::istringstream is(bytes, std::ios::binary);
  return read_checkpoint(is);
}

}  // namespace

TEST(Config, DefaultsAndOverrides) {
  const auto cfg = parse_config("# comment\n\nembed_dim = 16\ntruncation=tail\nfocal_alpha=0.25\nseed=9\n");
  EXPECT_EQ(cfg.embed_dim, 16u);
  EXPECT_EQ(cfg.truncation, Truncation::Tail);
  EXPECT_EQ(cfg.focal_alpha, 0.25);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.hidden_dim, ModelConfig{}.hidden_dim);
  EXPECT_EQ(cfg.patience, 3u);
  EXPECT_EQ(cfg.decay_factor, 0.5);
  EXPECT_EQ(parse_config(""), ModelConfig{});
}

TEST(Config, FormatRoundTripsExactly) {
  ModelConfig cfg;
  cfg.learning_rate = 0.1 + 0.2;  // not exactly representable in short decimal
  cfg.focal_gamma = 1.0 / 3.0;
  cfg.lengths.slice = 77;
  cfg.seed = 18446744073709551615ULL;
  const auto text = format_config(cfg);
  EXPECT_EQ(parse_config(text), cfg);
  EXPECT_EQ(format_config(parse_config(text)), text);
}

TEST(Config, ErrorsCarryTheLine) {
  try {
    parse_config("embed_dim=4\n\nbogus=1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), 3u);
    EXPECT_EQ(e.kind(), ParseError::Position::Line);
  }
  try {
    parse_config("no equals sign\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), 1u);
  }
  EXPECT_THROW(parse_config("embed_dim=four\n"), Error);
  EXPECT_THROW(parse_config("truncation=middle\n"), Error);
  EXPECT_THROW(parse_config("focal_alpha=1\n"), Error);
  EXPECT_THROW(parse_config("threshold=0\n"), Error);
  EXPECT_THROW(parse_config("decay_factor=0\n"), Error);
  EXPECT_THROW(load_config("/nonexistent/warnsift.cfg"), Error);
}

TEST(Checkpoint, RoundTripIsBitExact) {
  std::mt19937_64 rng(1);
  const auto shape = test::tiny_shape(30, 5);
  const auto p = ModelParams::init(shape, rng);
  ModelConfig cfg;
  cfg.embed_dim = cfg.hidden_dim = cfg.attr_dim = 5;
  cfg.seed = 77;
  const auto bytes = checkpoint_bytes(cfg, p);
  EXPECT_EQ(bytes.substr(0, 8), "WSIFTCKP");
  const auto ck = from_bytes(bytes);
  EXPECT_EQ(ck.config, cfg);
  const auto a = p.entries(), b = ck.params.entries();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, b[i].first);
    EXPECT_EQ(*a[i].second, *b[i].second) << a[i].first;
  }
  EXPECT_EQ(checkpoint_bytes(ck.config, ck.params), bytes);
  // the reloaded model scores identically
  const auto s = test::random_sample(rng, shape);
  EXPECT_EQ(score(p, s), score(ck.params, s));
}

TEST(Checkpoint, CorruptInputsAreRejected) {
  std::mt19937_64 rng(2);
  const auto p = ModelParams::init(test::tiny_shape(10, 3), rng);
  const auto bytes = checkpoint_bytes(ModelConfig{}, p);

  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(from_bytes(bad_magic), Error);

  auto bad_version = bytes;
  bad_version[8] = 2;
  EXPECT_THROW(from_bytes(bad_version), Error);

  EXPECT_THROW(from_bytes(bytes.substr(0, bytes.size() - 3)), Error);
  EXPECT_THROW(from_bytes(""), Error);

  // a renamed tensor
  auto renamed = bytes;
  const auto at = renamed.find("out.W");
  ASSERT_NE(at, std::string::npos);
  renamed[at] = 'x';
  EXPECT_THROW(from_bytes(renamed), Error);

  // one tensor with an inconsistent shape
  auto q = p;
  q.out_b = Tensor(1, 2);
  EXPECT_THROW(from_bytes(checkpoint_bytes(ModelConfig{}, q)), Error);

  EXPECT_THROW(load_checkpoint("/nonexistent/model.ckpt"), Error);
}

TEST(ModelFiles, SideTablesTravelWithTheCheckpoint) {
  std::vector<LabeledWarning> corpus;
  for (const char* r : {"NP_NULL", "DM_DEFAULT_ENCODING"}) {
    WarningRecord w;
    w.rule = r;
    corpus.push_back({w, Label::Insensitive, {}});
  }
  TrainedModel m;
  m.vocab = Vocabulary::build({{"a", "b", "c"}});
  m.rules = RuleIds::build(corpus);
  m.config.embed_dim = m.config.hidden_dim = m.config.attr_dim = 3;
  std::mt19937_64 rng(3);
  m.params = ModelParams::init({m.vocab.size(), m.rules.size(), 3, 3, 3}, rng);
  const auto dir = test::scratch("model_files");
  const auto ckpt = dir / "nested" / "m.ckpt";
  save_model(ckpt, m);
  EXPECT_TRUE(std::filesystem::exists(vocab_path(ckpt)));
  EXPECT_TRUE(std::filesystem::exists(rules_path(ckpt)));
  const auto back = load_model(ckpt);
  EXPECT_EQ(back.vocab, m.vocab);
  EXPECT_EQ(back.rules.names(), m.rules.names());
  EXPECT_EQ(back.config, m.config);

  // a vocabulary that does not fit the embedding table
  write_file(vocab_path(ckpt), "<pad>\n<unk>\n");
  EXPECT_THROW(load_model(ckpt), Error);
}
