#pragma once

// The verifier network: four embedded token channels through bidirectional
// LSTMs, pooled queries with cross attention between the function and
// message channels, an attribute encoder, and a sigmoid output.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "warnsift/common.hpp"
#include "warnsift/nn/autodiff.hpp"
#include "warnsift/nn/tensor.hpp"
#include "warnsift/text.hpp"

namespace warnsift {

using nn::Tape;
using nn::Tensor;
using nn::Var;

struct ModelConfig {
  std::size_t vocab_size = kDefaultVocabCap;
  std::size_t embed_dim = 512;
  std::size_t hidden_dim = 512;  // per direction
  std::size_t attr_dim = 32;
  ChannelLengths lengths;
  Truncation truncation = Truncation::Head;
  double focal_alpha = 0.05;
  double focal_gamma = 2.0;
  double learning_rate = 5e-5;
  std::size_t batch_size = 64;
  double threshold = 0.5;
  std::size_t patience = 3;
  double decay_factor = 0.5;
  std::size_t max_epochs = 20;
  std::uint64_t seed = 42;

  void validate() const {
    auto need = [](bool ok, const char* what) {
      if (!ok) throw Error(std::string("invalid model config: ") + what);
    };
    need(focal_alpha > 0 && focal_alpha < 1, "focal_alpha must lie in (0,1)");
    need(focal_gamma >= 0, "focal_gamma must be nonnegative");
    need(threshold > 0 && threshold < 1, "threshold must lie in (0,1)");
    need(vocab_size >= 2 && embed_dim > 0 && hidden_dim > 0 && attr_dim > 0, "dimensions must be positive");
    need(lengths.function > 0 && lengths.field > 0 && lengths.slice > 0 && lengths.message > 0,
         "channel lengths must be positive");
    need(learning_rate > 0, "learning_rate must be positive");
    need(batch_size > 0, "batch_size must be positive");
    need(decay_factor > 0 && decay_factor <= 1, "decay_factor must lie in (0,1]");
    need(patience > 0, "patience must be positive");
  }

  bool operator==(const ModelConfig& o) const {
    return vocab_size == o.vocab_size && embed_dim == o.embed_dim && hidden_dim == o.hidden_dim &&
           attr_dim == o.attr_dim && lengths.function == o.lengths.function && lengths.field == o.lengths.field &&
           lengths.slice == o.lengths.slice && lengths.message == o.lengths.message && truncation == o.truncation &&
           focal_alpha == o.focal_alpha && focal_gamma == o.focal_gamma && learning_rate == o.learning_rate &&
           batch_size == o.batch_size && threshold == o.threshold && patience == o.patience &&
           decay_factor == o.decay_factor && max_epochs == o.max_epochs && seed == o.seed;
  }
};

/// Table sizes that depend on the data rather than the config.
struct ModelShape {
  std::size_t vocab_rows = 2;
  std::size_t rule_rows = 1;
  std::size_t embed_dim = 8;
  std::size_t hidden_dim = 8;
  std::size_t attr_dim = 32;

  std::size_t fused_dim() const { return 4 * 2 * hidden_dim + 4 * attr_dim; }
};

inline constexpr std::array<const char*, 4> kChannelNames = {"function", "field", "slice", "message"};
inline constexpr std::array<const char*, 4> kAttributeNames = {"rule", "category", "rank", "confidence"};

/// Gate layout along the 4h axis: input, forget, candidate, output.
struct LstmDirection {
  Tensor W;  // d_e × 4h
  Tensor U;  // h × 4h
  Tensor b;  // 1 × 4h
};

struct BiLstmParams {
  LstmDirection fwd, bwd;
};

struct ModelParams {
  std::array<Tensor, 4> embed;       // per channel, vocab × d_e
  std::array<BiLstmParams, 4> lstm;  // per channel
  std::array<Tensor, 4> attr_embed;  // per attribute, table × d_a
  Tensor attr_W;                     // d_a × d_a, shared by the attributes
  std::array<Tensor, 4> attr_b;      // per attribute, 1 × d_a
  Tensor out_W;                      // fused × 1
  Tensor out_b;                      // 1 × 1

  /// Every tensor with a stable dotted name, in a fixed order.
  std::vector<std::pair<std::string, Tensor*>> entries() {
    std::vector<std::pair<std::string, Tensor*>> out;
    for (std::size_t c = 0; c < 4; ++c) out.emplace_back(std::string("embed.") + kChannelNames[c], &embed[c]);
    for (std::size_t c = 0; c < 4; ++c) {
      for (auto [dir, d] : {std::pair{"fwd", &lstm[c].fwd}, std::pair{"bwd", &lstm[c].bwd}}) {
        const std::string p = std::string("lstm.") + kChannelNames[c] + "." + dir + ".";
        out.emplace_back(p + "W", &d->W);
        out.emplace_back(p + "U", &d->U);
        out.emplace_back(p + "b", &d->b);
      }
    }
    for (std::size_t a = 0; a < 4; ++a) out.emplace_back(std::string("attr_embed.") + kAttributeNames[a], &attr_embed[a]);
    out.emplace_back("attr.W", &attr_W);
    for (std::size_t a = 0; a < 4; ++a) out.emplace_back(std::string("attr.b.") + kAttributeNames[a], &attr_b[a]);
    out.emplace_back("out.W", &out_W);
    out.emplace_back("out.b", &out_b);
    return out;
  }

  std::vector<std::pair<std::string, const Tensor*>> entries() const {
    std::vector<std::pair<std::string, const Tensor*>> out;
    for (auto& [n, t] : const_cast<ModelParams*>(this)->entries()) out.emplace_back(n, t);
    return out;
  }

  template <class F>
  void visit(F&& f) {
    for (auto& [n, t] : entries()) f(n, *t);
  }
  template <class F>
  void visit(F&& f) const {
    for (auto& [n, t] : entries()) f(n, *t);
  }

  std::size_t parameter_count() const {
    std::size_t n = 0;
    visit([&](const std::string&, const Tensor& t) { n += t.size(); });
    return n;
  }

  ModelShape shape() const {
    ModelShape s;
    s.vocab_rows = embed[0].rows;
    s.rule_rows = attr_embed[0].rows;
    s.embed_dim = embed[0].cols;
    s.hidden_dim = lstm[0].fwd.U.rows;
    s.attr_dim = attr_W.rows;
    return s;
  }

  /// All-zero parameters of the given shape.
  static ModelParams zeros(const ModelShape& s) {
    ModelParams p;
    const std::size_t h4 = 4 * s.hidden_dim;
    for (std::size_t c = 0; c < 4; ++c) {
      p.embed[c] = Tensor(s.vocab_rows, s.embed_dim);
      for (auto* d : {&p.lstm[c].fwd, &p.lstm[c].bwd}) {
        d->W = Tensor(s.embed_dim, h4);
        d->U = Tensor(s.hidden_dim, h4);
        d->b = Tensor(1, h4);
      }
    }
    const std::array<std::size_t, 4> tables = {s.rule_rows, kCategoryNames.size(), kRankTableSize,
                                               kConfidenceTableSize};
    for (std::size_t a = 0; a < 4; ++a) {
      p.attr_embed[a] = Tensor(tables[a], s.attr_dim);
      p.attr_b[a] = Tensor(1, s.attr_dim);
    }
    p.attr_W = Tensor(s.attr_dim, s.attr_dim);
    p.out_W = Tensor(s.fused_dim(), 1);
    p.out_b = Tensor(1, 1);
    return p;
  }

  /// Embeddings U(±0.05); LSTM matrices U(±1/√h); dense layers U(±1/√fan_in);
  /// biases zero except the forget gate, which starts at 1.
  static ModelParams init(const ModelShape& s, std::mt19937_64& rng) {
    ModelParams p = zeros(s);
    const double lstm_bound = 1.0 / std::sqrt(static_cast<double>(s.hidden_dim));
    for (std::size_t c = 0; c < 4; ++c) {
      p.embed[c] = nn::uniform(s.vocab_rows, s.embed_dim, 0.05, rng);
      for (auto* d : {&p.lstm[c].fwd, &p.lstm[c].bwd}) {
        d->W = nn::uniform(d->W.rows, d->W.cols, lstm_bound, rng);
        d->U = nn::uniform(d->U.rows, d->U.cols, lstm_bound, rng);
        for (std::size_t k = 0; k < s.hidden_dim; ++k) d->b.data[s.hidden_dim + k] = 1.0;
      }
    }
    for (auto& e : p.attr_embed) e = nn::uniform(e.rows, e.cols, 0.05, rng);
    p.attr_W = nn::uniform(s.attr_dim, s.attr_dim, 1.0 / std::sqrt(static_cast<double>(s.attr_dim)), rng);
    p.out_W = nn::uniform(s.fused_dim(), 1, 1.0 / std::sqrt(static_cast<double>(s.fused_dim())), rng);
    return p;
  }
};

/// Values of every intermediate of one forward pass. Hidden-state matrices
/// and attention weights span the full padded channel length, with zeros at
/// masked positions.
struct ForwardTrace {
  std::array<Tensor, 4> H;  // function, field, slice, message
  Tensor q_f, q_m;
  Tensor alpha_f, alpha_m;  // weights of V_f over message positions, V_m over function positions
  Tensor V_f, V_m, V_fc, V_J;
  std::array<Tensor, 4> x;    // attribute embeddings
  std::array<Tensor, 4> V_at; // encoded attributes
  Tensor V_a, V, V_l;
  double L = 0.0;
};

namespace detail {

/// Binds every parameter tensor to the tape, with gradients when `grads` is set.
struct BoundParams {
  std::array<Var, 4> embed;
  std::array<std::array<std::array<Var, 3>, 2>, 4> lstm;  // [channel][dir][W,U,b]
  std::array<Var, 4> attr_embed;
  Var attr_W;
  std::array<Var, 4> attr_b;
  Var out_W, out_b;

  BoundParams(Tape& t, const ModelParams& p, ModelParams* g) {
    auto bind = [&](const Tensor& v, Tensor* gv) { return t.param(v, g ? gv : nullptr); };
    for (std::size_t c = 0; c < 4; ++c) {
      embed[c] = bind(p.embed[c], g ? &g->embed[c] : nullptr);
      const LstmDirection* dirs[2] = {&p.lstm[c].fwd, &p.lstm[c].bwd};
      LstmDirection* gdirs[2] = {g ? &g->lstm[c].fwd : nullptr, g ? &g->lstm[c].bwd : nullptr};
      for (int d = 0; d < 2; ++d) {
        lstm[c][d][0] = bind(dirs[d]->W, g ? &gdirs[d]->W : nullptr);
        lstm[c][d][1] = bind(dirs[d]->U, g ? &gdirs[d]->U : nullptr);
        lstm[c][d][2] = bind(dirs[d]->b, g ? &gdirs[d]->b : nullptr);
      }
    }
    for (std::size_t a = 0; a < 4; ++a) {
      attr_embed[a] = bind(p.attr_embed[a], g ? &g->attr_embed[a] : nullptr);
      attr_b[a] = bind(p.attr_b[a], g ? &g->attr_b[a] : nullptr);
    }
    attr_W = bind(p.attr_W, g ? &g->attr_W : nullptr);
    out_W = bind(p.out_W, g ? &g->out_W : nullptr);
    out_b = bind(p.out_b, g ? &g->out_b : nullptr);
  }
};

inline std::vector<std::size_t> real_positions(const EncodedChannel& ch) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < ch.mask.size(); ++i) {
    if (ch.mask[i]) pos.push_back(i);
  }
  return pos;
}

inline Tensor expand_rows(const Tensor& compact, const std::vector<std::size_t>& pos, std::size_t length) {
  Tensor full(length, compact.cols);
  for (std::size_t k = 0; k < pos.size(); ++k) std::copy_n(compact.row(k), compact.cols, full.row(pos[k]));
  return full;
}

}  // namespace detail

/// One LSTM direction over the rows of X; returns one hidden row per step in
/// input order.
inline std::vector<Var> lstm_direction(Var X, Var W, Var U, Var b, bool reverse) {
  auto& t = *X.tape;
  const std::size_t n = X.value().rows;
  const std::size_t h = U.value().rows;
  const Var proj = nn::add_row(nn::matmul(X, W), b);
  Var hprev = t.constant(Tensor(1, h));
  Var cprev = t.constant(Tensor(1, h));
  std::vector<Var> hs(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t i = reverse ? n - 1 - s : s;
    const Var z = nn::add(nn::row(proj, i), nn::matmul(hprev, U));
    const Var hc = nn::lstm_cell(z, cprev);
    hprev = nn::slice_cols(hc, 0, h);
    cprev = nn::slice_cols(hc, h, h);
    hs[i] = hprev;
  }
  return hs;
}

/// Bidirectional LSTM over the rows of X (real positions only): n × 2h.
inline Var bilstm(Var X, const std::array<std::array<Var, 3>, 2>& p) {
  const auto f = lstm_direction(X, p[0][0], p[0][1], p[0][2], false);
  const auto b = lstm_direction(X, p[1][0], p[1][1], p[1][2], true);
  std::vector<Var> rows(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) rows[i] = nn::concat_cols({f[i], b[i]});
  return nn::stack_rows(rows);
}

/// Elementwise maximum over the rows of H.
inline Var maxpool(Var H) {
  if (H.value().rows == 0) throw Error("maxpool: every position is masked");
  return nn::max_rows(H);
}

struct Attention {
  Var context;  // 1 × dim
  Var weights;  // n × 1
};

/// Softmax of q·h_i over the rows of H and the weighted sum of the rows.
inline Attention cross_attention(Var q, Var H) {
  if (H.value().rows == 0) throw Error("cross_attention: every position is masked");
  if (q.value().cols != H.value().cols) throw Error("cross_attention: query and state widths differ");
  const Var logits = nn::matmul(H, nn::transpose(q));
  const Var w = nn::softmax_col(logits);
  // Σ w_i h_i computed as h_0 + Σ w_i (h_i − h_0): the same value since the
  // weights sum to one, and exactly h_0 when every state is equal.
  const Var h0 = nn::row(H, 0);
  const Var spread = nn::add(H, nn::matmul(H.tape->constant(Tensor(H.value().rows, 1, -1.0)), h0));
  return {nn::add(h0, nn::matmul(nn::transpose(w), spread)), w};
}

/// Value-level maxpool over the unmasked rows of H.
inline Tensor maxpool(const Tensor& H, const std::vector<std::uint8_t>& mask) {
  Tape t;
  std::vector<Var> rows;
  const Var h = t.constant(H);
  for (std::size_t i = 0; i < H.rows; ++i) {
    if (i < mask.size() && mask[i]) rows.push_back(nn::row(h, i));
  }
  if (rows.empty()) throw Error("maxpool: every position is masked");
  return maxpool(nn::stack_rows(rows)).value();
}

/// Value-level attention over the unmasked rows of H. Weights span all rows,
/// zero where masked.
inline std::pair<Tensor, Tensor> cross_attention(const Tensor& q, const Tensor& H, const std::vector<std::uint8_t>& mask) {
  Tape t;
  const Var h = t.constant(H);
  std::vector<Var> rows;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < H.rows; ++i) {
    if (i < mask.size() && mask[i]) {
      rows.push_back(nn::row(h, i));
      pos.push_back(i);
    }
  }
  if (rows.empty()) throw Error("cross_attention: every position is masked");
  const auto a = cross_attention(t.constant(q), nn::stack_rows(rows));
  return {a.context.value(), detail::expand_rows(a.weights.value(), pos, H.rows)};
}

struct AttributeEncoding {
  std::array<Var, 4> x;
  std::array<Var, 4> encoded;
  Var V_a;
};

/// x_t = row a_t of its table; V_at = x_t W_a + b_t; V_a = concatenation.
inline AttributeEncoding attribute_encode(const AttributeIds& ids, const std::array<Var, 4>& tables, Var W,
                                          const std::array<Var, 4>& biases) {
  AttributeEncoding r;
  const std::array<int, 4> a = {ids.rule, ids.category, ids.rank, ids.confidence};
  std::vector<Var> parts;
  for (std::size_t k = 0; k < 4; ++k) {
    const int id = a[k];
    r.x[k] = nn::gather_rows(tables[k], std::span<const int>(&id, 1));
    r.encoded[k] = nn::add(nn::matmul(r.x[k], W), biases[k]);
    parts.push_back(r.encoded[k]);
  }
  r.V_a = nn::concat_cols(parts);
  return r;
}

/// Runs the network on one sample and returns the 1×1 probability node.
/// With `grads` set, parameter gradients accumulate there on backward.
inline Var forward(Tape& t, const ModelParams& p, const EncodedSample& s, ModelParams* grads = nullptr,
                   ForwardTrace* trace = nullptr) {
  const detail::BoundParams bp(t, p, grads);
  const std::array<const EncodedChannel*, 4> channels = {&s.function, &s.field, &s.slice, &s.message};
  std::array<Var, 4> H;
  std::array<std::vector<std::size_t>, 4> pos;
  for (std::size_t c = 0; c < 4; ++c) {
    pos[c] = detail::real_positions(*channels[c]);
    if (pos[c].empty()) throw Error(std::string("channel '") + kChannelNames[c] + "' has no tokens");
    std::vector<int> ids;
    for (auto i : pos[c]) ids.push_back(channels[c]->ids[i]);
    H[c] = bilstm(nn::gather_rows(bp.embed[c], ids), bp.lstm[c]);
  }
  const Var q_f = maxpool(H[0]);
  const Var q_m = maxpool(H[3]);
  const auto att_f = cross_attention(q_f, H[3]);
  const auto att_m = cross_attention(q_m, H[0]);
  const Var V_fc = maxpool(H[1]);
  const Var V_J = maxpool(H[2]);
  const auto attrs = attribute_encode(s.attrs, bp.attr_embed, bp.attr_W, bp.attr_b);
  const Var V = nn::concat_cols({V_fc, att_f.context, V_J, att_m.context, attrs.V_a});
  if (V.value().cols != p.out_W.rows) throw Error("fused vector width does not match the output layer");
  const Var V_l = nn::add(nn::matmul(V, bp.out_W), bp.out_b);
  const Var L = nn::sigmoid(V_l);
  if (trace) {
    for (std::size_t c = 0; c < 4; ++c) trace->H[c] = detail::expand_rows(H[c].value(), pos[c], channels[c]->mask.size());
    trace->q_f = q_f.value();
    trace->q_m = q_m.value();
    trace->alpha_f = detail::expand_rows(att_f.weights.value(), pos[3], s.message.mask.size());
    trace->alpha_m = detail::expand_rows(att_m.weights.value(), pos[0], s.function.mask.size());
    trace->V_f = att_f.context.value();
    trace->V_m = att_m.context.value();
    trace->V_fc = V_fc.value();
    trace->V_J = V_J.value();
    for (std::size_t k = 0; k < 4; ++k) {
      trace->x[k] = attrs.x[k].value();
      trace->V_at[k] = attrs.encoded[k].value();
    }
    trace->V_a = attrs.V_a.value();
    trace->V = V.value();
    trace->V_l = V_l.value();
    trace->L = L.value().data[0];
  }
  return L;
}

/// Probability that the warning is bug-sensitive.
inline double score(const ModelParams& p, const EncodedSample& s) {
  Tape t;
  return forward(t, p, s).value().data[0];
}

/// Bug-sensitive iff L > δ.
inline bool predict(double L, double delta) { return L > delta; }

/// Mean focal loss of a batch; with `grads` set, accumulates the gradient
/// of that mean.
inline double batch_loss(const ModelParams& p, std::span<const EncodedSample> batch, double alpha, double gamma,
                         ModelParams* grads = nullptr) {
  if (batch.empty()) throw Error("batch_loss: empty batch");
  double total = 0.0;
  Tape t;
  for (const auto& s : batch) {
    t.clear();
    const Var L = forward(t, p, s, grads);
    const Var loss = nn::focal_loss(L, s.label, alpha, gamma);
    total += loss.value().data[0];
    if (grads) t.backward(loss, 1.0 / static_cast<double>(batch.size()));
  }
  return total / static_cast<double>(batch.size());
}

}  // namespace warnsift
