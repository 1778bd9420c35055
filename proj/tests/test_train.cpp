#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "warnsift/train.hpp"
#include "model_util.hpp"

using namespace warnsift;

namespace {

ModelConfig small_config() {
  ModelConfig c;
  c.embed_dim = 4;
  c.hidden_dim = 4;
  c.attr_dim = 4;
  c.batch_size = 8;
  c.max_epochs = 4;
  c.seed = 5;
  return c;
}

/// Two token populations and distinct attributes per class: linearly
/// separable from any channel.
std::vector<EncodedSample> separable(std::size_t n, std::size_t positives, std::mt19937_64& rng,
                                     const ModelShape& shape) {
  std::vector<EncodedSample> out;
  for (std::size_t k = 0; k < n; ++k) {
    auto s = test::random_sample(rng, shape, 4);
    s.label = k < positives ? 1 : 0;
    for (auto* ch : {&s.function, &s.field, &s.slice, &s.message}) {
      for (std::size_t i = 0; i < ch->ids.size(); ++i) {
        if (ch->mask[i]) ch->ids[i] = static_cast<int>((s.label ? 2 : 10) + rng() % 6);
      }
    }
    s.attrs = s.label ? AttributeIds{1, 1, 3, 1} : AttributeIds{2, 4, 15, 3};
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Adam, ZeroGradientLeavesParametersUnchanged) {
  std::mt19937_64 rng(1);
  const auto shape = test::tiny_shape(10, 3);
  auto p = ModelParams::init(shape, rng);
  const auto before = p;
  const auto zero = ModelParams::zeros(shape);
  Adam adam(p);
  for (int k = 0; k < 5; ++k) adam.step(p, zero, 1e-3);
  EXPECT_EQ(p.out_W, before.out_W);
  EXPECT_EQ(p.embed[2], before.embed[2]);
  EXPECT_EQ(adam.steps(), 5u);
}

TEST(Adam, HandSteps) {
  const auto shape = test::tiny_shape(10, 3);
  auto p = ModelParams::zeros(shape);
  auto g = ModelParams::zeros(shape);
  g.out_b.data[0] = 1.0;
  Adam adam(p);
  adam.step(p, g, 5e-5);
  // m̂ = 1, v̂ = 1
  EXPECT_DOUBLE_EQ(p.out_b.data[0], -5e-5 / (1.0 + 1e-8));
  EXPECT_NEAR(p.out_b.data[0], -5e-5, 1e-12);
  EXPECT_EQ(p.out_W.data[0], 0.0);
  // second step with g = −2: m = 0.09 − 0.2, v = 0.000999 + 0.004
  g.out_b.data[0] = -2.0;
  adam.step(p, g, 5e-5);
  const double m = 0.9 * 0.1 + 0.1 * -2.0, v = 0.999 * 0.001 + 0.001 * 4.0;
  const double mh = m / (1 - 0.81), vh = v / (1 - 0.999 * 0.999);
  EXPECT_NEAR(p.out_b.data[0], -5e-5 / (1.0 + 1e-8) - 5e-5 * mh / (std::sqrt(vh) + 1e-8), 1e-15);
}

TEST(Plateau, OneDecayAfterThreeFlatEpochs) {
  PlateauScheduler s(1.0, 2, 0.5);
  EXPECT_FALSE(s.observe(40));
  EXPECT_FALSE(s.observe(40));
  EXPECT_TRUE(s.observe(40));
  EXPECT_EQ(s.lr(), 0.5);
  EXPECT_FALSE(s.observe(40));  // the count restarts after a decay
  EXPECT_TRUE(s.observe(39));
  EXPECT_EQ(s.lr(), 0.25);
  EXPECT_FALSE(s.observe(41));
  EXPECT_EQ(s.best(), 41);
}

TEST(Train, FlatValidationDecaysOnceAfterEpochThree) {
  std::mt19937_64 rng(2);
  auto cfg = small_config();
  cfg.learning_rate = 1e-14;  // too small to move any prediction
  cfg.patience = 2;
  cfg.max_epochs = 4;
  const auto shape = test::tiny_shape(20, 4);
  const auto data = separable(16, 4, rng, shape);
  const auto res = train(data, data, cfg, ModelParams::init(shape, rng));
  ASSERT_EQ(res.history.size(), 4u);
  for (const auto& r : res.history) EXPECT_EQ(r.valid_f1, res.history[0].valid_f1);
  EXPECT_EQ(res.history[0].decayed, false);
  EXPECT_EQ(res.history[1].decayed, false);
  EXPECT_EQ(res.history[2].decayed, true);
  EXPECT_EQ(res.history[3].decayed, false);
  EXPECT_EQ(res.history[2].lr, 1e-14);
  EXPECT_EQ(res.history[3].lr, 0.5e-14);
  EXPECT_EQ(res.best_epoch, 1u);
}

TEST(Train, SeparableCorpusIsLearned) {
  std::mt19937_64 rng(3);
  auto cfg = small_config();
  cfg.learning_rate = 0.02;
  cfg.focal_alpha = 0.5;
  cfg.max_epochs = 60;
  const auto shape = test::tiny_shape(20, 4);
  const auto data = separable(64, 32, rng, shape);
  TrainOptions opt;
  opt.stop_when_perfect = true;
  const auto init = ModelParams::init(shape, rng);
  EXPECT_LT(evaluate(init, data, cfg.threshold).sensitive.f1.value_or(0.0), 100.0);
  const auto res = train(data, data, cfg, init, opt);
  EXPECT_EQ(res.best_valid_f1, 100.0);
  EXPECT_EQ(evaluate(res.params, data, cfg.threshold).sensitive.f1, 100.0);
  EXPECT_LT(batch_loss(res.params, data, cfg.focal_alpha, cfg.focal_gamma),
            batch_loss(init, data, cfg.focal_alpha, cfg.focal_gamma));
}

TEST(Train, KeepsBestValidationParameters) {
  std::mt19937_64 rng(4);
  auto cfg = small_config();
  cfg.learning_rate = 0.05;
  cfg.max_epochs = 8;
  cfg.focal_alpha = 0.5;
  const auto shape = test::tiny_shape(20, 4);
  const auto tr = separable(32, 16, rng, shape);
  const auto va = separable(12, 6, rng, shape);
  const auto res = train(tr, va, cfg, ModelParams::init(shape, rng));
  double best = -1;
  for (const auto& r : res.history) best = std::max(best, r.valid_f1);
  EXPECT_EQ(res.best_valid_f1, best);
  EXPECT_EQ(res.history[res.best_epoch - 1].valid_f1, best);
  EXPECT_EQ(evaluate(res.params, va, cfg.threshold).sensitive.f1.value_or(0.0), best);
}

TEST(Train, DeterministicForSeed) {
  const auto shape = test::tiny_shape(20, 4);
  auto run = [&] {
    std::mt19937_64 rng(6);
    const auto data = separable(24, 8, rng, shape);
    auto cfg = small_config();
    cfg.learning_rate = 0.01;
    return train(data, data, cfg, ModelParams::init(shape, rng));
  };
  const auto a = run(), b = run();
  EXPECT_EQ(a.history, b.history);
  auto ea = a.params.entries(), eb = b.params.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) EXPECT_EQ(*ea[i].second, *eb[i].second) << ea[i].first;
}

TEST(Train, EmptySplitsAreErrors) {
  std::mt19937_64 rng(7);
  const auto shape = test::tiny_shape(20, 4);
  const auto data = separable(4, 2, rng, shape);
  const auto init = ModelParams::init(shape, rng);
  EXPECT_THROW(train({}, data, small_config(), init), Error);
  EXPECT_THROW(train(data, {}, small_config(), init), Error);
  auto bad = small_config();
  bad.focal_alpha = 1.0;
  EXPECT_THROW(train(data, data, bad, init), Error);
}

TEST(Shuffle, PermutationDependingOnlyOnSeed) {
  std::vector<std::size_t> a(50), b(50);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), 0);
  std::mt19937_64 r1(9), r2(9);
  shuffle_indices(a, r1);
  shuffle_indices(b, r2);
  EXPECT_EQ(a, b);
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
  std::vector<std::size_t> id(50);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_NE(a, id);
}
