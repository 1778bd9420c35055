#pragma once

#include <cmath>
#include <limits>

#include "warnsift/model.hpp"

namespace warnsift {

struct AdamOptions {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Bias-corrected Adam with moments shaped like the parameters.
class Adam {
 public:
  explicit Adam(const ModelParams& like, AdamOptions opt = {})
      : opt_(opt), m_(ModelParams::zeros(like.shape())), v_(ModelParams::zeros(like.shape())) {}

  void step(ModelParams& params, const ModelParams& grads, double lr) {
    ++t_;
    const double c1 = 1.0 - std::pow(opt_.beta1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(opt_.beta2, static_cast<double>(t_));
    auto p = params.entries();
    const auto g = grads.entries();
    auto m = m_.entries();
    auto v = v_.entries();
    for (std::size_t k = 0; k < p.size(); ++k) {
      auto& P = p[k].second->data;
      const auto& G = g[k].second->data;
      auto& M = m[k].second->data;
      auto& V = v[k].second->data;
      if (G.size() != P.size()) throw Error("adam: gradient shape mismatch for " + p[k].first);
      for (std::size_t i = 0; i < P.size(); ++i) {
        M[i] = opt_.beta1 * M[i] + (1.0 - opt_.beta1) * G[i];
        V[i] = opt_.beta2 * V[i] + (1.0 - opt_.beta2) * G[i] * G[i];
        P[i] -= lr * (M[i] / c1) / (std::sqrt(V[i] / c2) + opt_.epsilon);
      }
    }
  }

  std::size_t steps() const { return t_; }

 private:
  AdamOptions opt_;
  ModelParams m_, v_;
  std::size_t t_ = 0;
};

/// Multiplies the learning rate by `factor` once the monitored score has
/// gone `patience` epochs without improving; the count then restarts.
class PlateauScheduler {
 public:
  PlateauScheduler(double lr, std::size_t patience, double factor) : lr_(lr), patience_(patience), factor_(factor) {}

  /// Records one epoch's score; returns true if the rate was decayed.
  bool observe(double score) {
    if (score > best_) {
      best_ = score;
      stale_ = 0;
      return false;
    }
    if (++stale_ < patience_) return false;
    stale_ = 0;
    lr_ *= factor_;
    return true;
  }

  double lr() const { return lr_; }
  double best() const { return best_; }

 private:
  double lr_;
  std::size_t patience_;
  double factor_;
  double best_ = -std::numeric_limits<double>::infinity();
  std::size_t stale_ = 0;
};

}  // namespace warnsift
