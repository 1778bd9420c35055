#pragma once

// Epoch loop: shuffled mini-batches, validation F1 on the sensitive class,
// plateau decay, and retention of the best-scoring parameters.

#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "warnsift/metrics.hpp"
#include "warnsift/model.hpp"
#include "warnsift/optim.hpp"

namespace warnsift {

struct EpochRecord {
  std::size_t epoch = 0;  // from 1
  double train_loss = 0.0;
  double valid_f1 = 0.0;  // sensitive class, percent
  double lr = 0.0;        // rate used during the epoch
  bool decayed = false;   // rate decayed after the epoch

  bool operator==(const EpochRecord&) const = default;
};

struct TrainResult {
  ModelParams params;  // best validation F1
  std::vector<EpochRecord> history;
  std::size_t best_epoch = 0;
  double best_valid_f1 = 0.0;
};

struct TrainOptions {
  /// Stop once validation F1 reaches 100.
  bool stop_when_perfect = false;
  std::function<void(const EpochRecord&)> on_epoch;
};

inline std::vector<double> score_all(const ModelParams& p, const std::vector<EncodedSample>& data) {
  std::vector<double> out;
  out.reserve(data.size());
  for (const auto& s : data) out.push_back(score(p, s));
  return out;
}

inline MetricsReport evaluate(const ModelParams& p, const std::vector<EncodedSample>& data, double threshold) {
  std::vector<int> pred, gold;
  for (const auto& s : data) {
    pred.push_back(predict(score(p, s), threshold) ? 1 : 0);
    gold.push_back(s.label);
  }
  return compute_metrics(pred, gold);
}

/// Fisher-Yates with an explicit draw so the order depends only on the seed.
inline void shuffle_indices(std::vector<std::size_t>& idx, std::mt19937_64& rng) {
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng() % i]);
}

inline TrainResult train(const std::vector<EncodedSample>& train_set, const std::vector<EncodedSample>& valid_set,
                         const ModelConfig& cfg, ModelParams init, const TrainOptions& opt = {}) {
  cfg.validate();
  if (train_set.empty()) throw Error("train: empty training split");
  if (valid_set.empty()) throw Error("train: empty validation split");
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  ModelParams params = std::move(init);
  ModelParams grads = ModelParams::zeros(params.shape());
  Adam adam(params);
  PlateauScheduler sched(cfg.learning_rate, cfg.patience, cfg.decay_factor);

  TrainResult res;
  res.params = params;
  res.best_valid_f1 = -1.0;
  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<EncodedSample> batch;
  for (std::size_t epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    EpochRecord rec;
    rec.epoch = epoch;
    rec.lr = sched.lr();
    shuffle_indices(order, rng);
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const std::size_t end = std::min(order.size(), start + cfg.batch_size);
      batch.clear();
      for (std::size_t k = start; k < end; ++k) batch.push_back(train_set[order[k]]);
      grads.visit([](const std::string&, Tensor& g) { g.zero(); });
      loss_sum += batch_loss(params, batch, cfg.focal_alpha, cfg.focal_gamma, &grads) * static_cast<double>(batch.size());
      adam.step(params, grads, sched.lr());
    }
    rec.train_loss = loss_sum / static_cast<double>(train_set.size());
    rec.valid_f1 = evaluate(params, valid_set, cfg.threshold).sensitive.f1.value_or(0.0);
    if (rec.valid_f1 > res.best_valid_f1) {
      res.best_valid_f1 = rec.valid_f1;
      res.best_epoch = epoch;
      res.params = params;
    }
    rec.decayed = sched.observe(rec.valid_f1);
    res.history.push_back(rec);
    if (opt.on_epoch) opt.on_epoch(rec);
    if (opt.stop_when_perfect && rec.valid_f1 >= 100.0) break;
  }
  return res;
}

}  // namespace warnsift
