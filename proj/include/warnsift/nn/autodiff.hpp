#pragma once

// Reverse-mode differentiation over a tape of matrix operations.
//
// Nodes are appended in evaluation order, so walking the tape backwards
// visits every node after all of its consumers. Parameter leaves refer to
// tensors owned elsewhere and accumulate straight into an external gradient.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "warnsift/common.hpp"
#include "warnsift/nn/tensor.hpp"

namespace warnsift::nn {

class Tape;

struct Var {
  Tape* tape = nullptr;
  std::size_t id = 0;

  const Tensor& value() const;
};

class Tape {
 public:
  using Backward = std::function<void(Tape&, std::size_t)>;

  Var constant(Tensor v) { return push(std::move(v), false, {}); }

  /// Leaf bound to a tensor the caller keeps alive. A null `grad` makes it a
  /// constant for differentiation purposes.
  Var param(const Tensor& v, Tensor* grad) {
    Node n;
    n.ext = &v;
    n.ext_grad = grad;
    n.requires_grad = grad != nullptr;
    if (grad && !grad->same_shape(v)) throw Error("gradient buffer shape mismatch");
    nodes_.push_back(std::move(n));
    return {this, nodes_.size() - 1};
  }

  Var push(Tensor v, bool requires_grad, Backward bw) {
    Node n;
    n.own = std::move(v);
    n.requires_grad = requires_grad;
    if (requires_grad) n.backward = std::move(bw);
    nodes_.push_back(std::move(n));
    return {this, nodes_.size() - 1};
  }

  const Tensor& value(std::size_t id) const {
    const auto& n = nodes_[id];
    return n.ext ? *n.ext : n.own;
  }
  bool requires_grad(std::size_t id) const { return nodes_[id].requires_grad; }
  bool requires_grad(Var v) const { return requires_grad(v.id); }

  /// Gradient buffer of a node, zero-allocated on first use.
  Tensor& grad(std::size_t id) {
    auto& n = nodes_[id];
    if (n.ext_grad) return *n.ext_grad;
    if (n.grad.empty()) {
      const auto& v = value(id);
      n.grad = Tensor(v.rows, v.cols);
    }
    return n.grad;
  }

  /// Propagates d(root)/d(node) scaled by `seed` to every parameter leaf.
  void backward(Var root, double seed = 1.0) {
    if (root.tape != this) throw Error("backward: variable from another tape");
    if (!nodes_[root.id].requires_grad) return;
    auto& g = grad(root.id);
    std::fill(g.data.begin(), g.data.end(), seed);
    for (std::size_t i = root.id + 1; i-- > 0;) {
      auto& n = nodes_[i];
      if (!n.backward || n.grad.empty()) continue;
      n.backward(*this, i);
    }
  }

  std::size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

 private:
  struct Node {
    Tensor own;
    const Tensor* ext = nullptr;
    Tensor grad;
    Tensor* ext_grad = nullptr;
    bool requires_grad = false;
    Backward backward;
  };

  std::vector<Node> nodes_;
};

inline const Tensor& Var::value() const { return tape->value(id); }

namespace detail {

inline Tape& same_tape(Var a, Var b) {
  if (a.tape != b.tape || !a.tape) throw Error("operands live on different tapes");
  return *a.tape;
}

// out += a * b (a: n×k, b: k×m)
inline void gemm_nn(const Tensor& a, const Tensor& b, Tensor& out) {
  for (std::size_t i = 0; i < a.rows; ++i) {
    double* o = out.row(i);
    const double* ar = a.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double av = ar[k];
      if (av == 0.0) continue;
      const double* br = b.row(k);
      for (std::size_t j = 0; j < b.cols; ++j) o[j] += av * br[j];
    }
  }
}

// out += a * bᵀ (a: n×m, b: k×m)
inline void gemm_nt(const Tensor& a, const Tensor& b, Tensor& out) {
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* ar = a.row(i);
    double* o = out.row(i);
    for (std::size_t k = 0; k < b.rows; ++k) {
      const double* br = b.row(k);
      double s = 0.0;
      for (std::size_t j = 0; j < a.cols; ++j) s += ar[j] * br[j];
      o[k] += s;
    }
  }
}

// out += aᵀ * b (a: n×k, b: n×m)
inline void gemm_tn(const Tensor& a, const Tensor& b, Tensor& out) {
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* ar = a.row(i);
    const double* br = b.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double av = ar[k];
      if (av == 0.0) continue;
      double* o = out.row(k);
      for (std::size_t j = 0; j < b.cols; ++j) o[j] += av * br[j];
    }
  }
}

inline double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace detail

inline Var matmul(Var a, Var b) {
  auto& t = detail::same_tape(a, b);
  const auto& A = a.value();
  const auto& B = b.value();
  if (A.cols != B.rows) throw Error("matmul: inner dimensions differ");
  Tensor out(A.rows, B.cols);
  detail::gemm_nn(A, B, out);
  return t.push(std::move(out), t.requires_grad(a) || t.requires_grad(b), [a = a.id, b = b.id](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    if (t.requires_grad(a)) detail::gemm_nt(g, t.value(b), t.grad(a));
    if (t.requires_grad(b)) detail::gemm_tn(t.value(a), g, t.grad(b));
  });
}

inline Var add(Var a, Var b) {
  auto& t = detail::same_tape(a, b);
  const auto& A = a.value();
  const auto& B = b.value();
  if (!A.same_shape(B)) throw Error("add: shape mismatch");
  Tensor out = A;
  for (std::size_t i = 0; i < out.size(); ++i) out.data[i] += B.data[i];
  return t.push(std::move(out), t.requires_grad(a) || t.requires_grad(b), [a = a.id, b = b.id](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    for (auto id : {a, b}) {
      if (!t.requires_grad(id)) continue;
      auto& d = t.grad(id);
      for (std::size_t i = 0; i < g.size(); ++i) d.data[i] += g.data[i];
    }
  });
}

/// a (n×m) plus the row vector b (1×m) on every row.
inline Var add_row(Var a, Var b) {
  auto& t = detail::same_tape(a, b);
  const auto& A = a.value();
  const auto& B = b.value();
  if (B.rows != 1 || B.cols != A.cols) throw Error("add_row: bias shape mismatch");
  Tensor out = A;
  for (std::size_t r = 0; r < out.rows; ++r) {
    for (std::size_t c = 0; c < out.cols; ++c) out(r, c) += B.data[c];
  }
  return t.push(std::move(out), t.requires_grad(a) || t.requires_grad(b), [a = a.id, b = b.id](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    if (t.requires_grad(a)) {
      auto& d = t.grad(a);
      for (std::size_t i = 0; i < g.size(); ++i) d.data[i] += g.data[i];
    }
    if (t.requires_grad(b)) {
      auto& d = t.grad(b);
      for (std::size_t r = 0; r < g.rows; ++r) {
        for (std::size_t c = 0; c < g.cols; ++c) d.data[c] += g(r, c);
      }
    }
  });
}

inline Var sigmoid(Var a) {
  auto& t = *a.tape;
  Tensor out = a.value();
  for (auto& v : out.data) v = detail::sigmoid(v);
  return t.push(std::move(out), t.requires_grad(a), [a = a.id](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    const auto& y = t.value(o);
    auto& d = t.grad(a);
    for (std::size_t i = 0; i < g.size(); ++i) d.data[i] += g.data[i] * y.data[i] * (1.0 - y.data[i]);
  });
}

/// Rows `ids` of `table`, stacked in order.
inline Var gather_rows(Var table, std::span<const int> ids) {
  auto& t = *table.tape;
  const auto& W = table.value();
  Tensor out(ids.size(), W.cols);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (ids[k] < 0 || static_cast<std::size_t>(ids[k]) >= W.rows) throw Error("embedding id out of range");
    std::copy_n(W.row(static_cast<std::size_t>(ids[k])), W.cols, out.row(k));
  }
  std::vector<int> keep(ids.begin(), ids.end());
  return t.push(std::move(out), t.requires_grad(table), [w = table.id, keep = std::move(keep)](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    auto& d = t.grad(w);
    for (std::size_t k = 0; k < keep.size(); ++k) {
      double* dr = d.row(static_cast<std::size_t>(keep[k]));
      const double* gr = g.row(k);
      for (std::size_t c = 0; c < g.cols; ++c) dr[c] += gr[c];
    }
  });
}

/// Row `r` of `a` as a 1×m vector.
inline Var row(Var a, std::size_t r) {
  auto& t = *a.tape;
  const auto& A = a.value();
  if (r >= A.rows) throw Error("row: index out of range");
  Tensor out(1, A.cols);
  std::copy_n(A.row(r), A.cols, out.data.data());
  return t.push(std::move(out), t.requires_grad(a), [a = a.id, r](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    double* d = t.grad(a).row(r);
    for (std::size_t c = 0; c < g.cols; ++c) d[c] += g.data[c];
  });
}

/// Columns [start, start + len) of every row.
inline Var slice_cols(Var a, std::size_t start, std::size_t len) {
  auto& t = *a.tape;
  const auto& A = a.value();
  if (start + len > A.cols) throw Error("slice_cols: range out of bounds");
  Tensor out(A.rows, len);
  for (std::size_t r = 0; r < A.rows; ++r) std::copy_n(A.row(r) + start, len, out.row(r));
  return t.push(std::move(out), t.requires_grad(a), [a = a.id, start](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    auto& d = t.grad(a);
    for (std::size_t r = 0; r < g.rows; ++r) {
      for (std::size_t c = 0; c < g.cols; ++c) d(r, start + c) += g(r, c);
    }
  });
}

/// Side-by-side concatenation of matrices with equal row counts.
inline Var concat_cols(const std::vector<Var>& parts) {
  if (parts.empty()) throw Error("concat_cols: nothing to concatenate");
  auto& t = *parts.front().tape;
  const std::size_t rows = parts.front().value().rows;
  std::size_t cols = 0;
  bool req = false;
  for (auto p : parts) {
    if (p.tape != &t) throw Error("operands live on different tapes");
    if (p.value().rows != rows) throw Error("concat_cols: row counts differ");
    cols += p.value().cols;
    req = req || t.requires_grad(p);
  }
  Tensor out(rows, cols);
  std::vector<std::size_t> ids;
  std::size_t off = 0;
  for (auto p : parts) {
    const auto& P = p.value();
    for (std::size_t r = 0; r < rows; ++r) std::copy_n(P.row(r), P.cols, out.row(r) + off);
    off += P.cols;
    ids.push_back(p.id);
  }
  return t.push(std::move(out), req, [ids = std::move(ids)](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    std::size_t off = 0;
    for (auto id : ids) {
      const std::size_t w = t.value(id).cols;
      if (t.requires_grad(id)) {
        auto& d = t.grad(id);
        for (std::size_t r = 0; r < g.rows; ++r) {
          for (std::size_t c = 0; c < w; ++c) d(r, c) += g(r, off + c);
        }
      }
      off += w;
    }
  });
}

/// Stacks 1×m vectors into an n×m matrix.
inline Var stack_rows(const std::vector<Var>& parts) {
  if (parts.empty()) throw Error("stack_rows: nothing to stack");
  auto& t = *parts.front().tape;
  const std::size_t cols = parts.front().value().cols;
  bool req = false;
  Tensor out(parts.size(), cols);
  std::vector<std::size_t> ids;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const auto& P = parts[r].value();
    if (parts[r].tape != &t) throw Error("operands live on different tapes");
    if (P.rows != 1 || P.cols != cols) throw Error("stack_rows: expected equal-width row vectors");
    std::copy_n(P.data.data(), cols, out.row(r));
    req = req || t.requires_grad(parts[r]);
    ids.push_back(parts[r].id);
  }
  return t.push(std::move(out), req, [ids = std::move(ids)](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    for (std::size_t r = 0; r < ids.size(); ++r) {
      if (!t.requires_grad(ids[r])) continue;
      auto& d = t.grad(ids[r]);
      for (std::size_t c = 0; c < g.cols; ++c) d.data[c] += g(r, c);
    }
  });
}

inline Var transpose(Var a) {
  auto& t = *a.tape;
  const auto& A = a.value();
  Tensor out(A.cols, A.rows);
  for (std::size_t r = 0; r < A.rows; ++r) {
    for (std::size_t c = 0; c < A.cols; ++c) out(c, r) = A(r, c);
  }
  return t.push(std::move(out), t.requires_grad(a), [a = a.id](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    auto& d = t.grad(a);
    for (std::size_t r = 0; r < g.rows; ++r) {
      for (std::size_t c = 0; c < g.cols; ++c) d(c, r) += g(r, c);
    }
  });
}

/// Column-wise maximum over all rows (1×m); the gradient goes to the first
/// row attaining each maximum.
inline Var max_rows(Var a) {
  auto& t = *a.tape;
  const auto& A = a.value();
  if (A.rows == 0) throw Error("max_rows: no rows");
  Tensor out(1, A.cols);
  std::vector<std::size_t> arg(A.cols, 0);
  for (std::size_t c = 0; c < A.cols; ++c) {
    out.data[c] = A(0, c);
    for (std::size_t r = 1; r < A.rows; ++r) {
      if (A(r, c) > out.data[c]) {
        out.data[c] = A(r, c);
        arg[c] = r;
      }
    }
  }
  return t.push(std::move(out), t.requires_grad(a), [a = a.id, arg = std::move(arg)](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    auto& d = t.grad(a);
    for (std::size_t c = 0; c < g.cols; ++c) d(arg[c], c) += g.data[c];
  });
}

/// Softmax down a single column (n×1), with max subtraction.
inline Var softmax_col(Var a) {
  auto& t = *a.tape;
  const auto& A = a.value();
  if (A.cols != 1 || A.rows == 0) throw Error("softmax_col: expected a nonempty column");
  Tensor out(A.rows, 1);
  const double m = *std::max_element(A.data.begin(), A.data.end());
  double z = 0.0;
  for (std::size_t i = 0; i < A.rows; ++i) z += out.data[i] = std::exp(A.data[i] - m);
  for (auto& v : out.data) v /= z;
  return t.push(std::move(out), t.requires_grad(a), [a = a.id](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    const auto& y = t.value(o);
    double dot = 0.0;
    for (std::size_t i = 0; i < y.rows; ++i) dot += g.data[i] * y.data[i];
    auto& d = t.grad(a);
    for (std::size_t i = 0; i < y.rows; ++i) d.data[i] += y.data[i] * (g.data[i] - dot);
  });
}

/// One LSTM cell given pre-activations z = [i f g o] (1×4h) and the previous
/// cell state (1×h). Returns [h c] as a 1×2h vector.
inline Var lstm_cell(Var z, Var c_prev) {
  auto& t = detail::same_tape(z, c_prev);
  const auto& Z = z.value();
  const auto& C = c_prev.value();
  const std::size_t h = C.cols;
  if (Z.rows != 1 || C.rows != 1 || Z.cols != 4 * h) throw Error("lstm_cell: shape mismatch");
  Tensor out(1, 2 * h);
  // Activated gates, then tanh(c): kept for the backward pass.
  std::vector<double> act(5 * h);
  for (std::size_t k = 0; k < h; ++k) {
    const double i = detail::sigmoid(Z.data[k]);
    const double f = detail::sigmoid(Z.data[h + k]);
    const double g = std::tanh(Z.data[2 * h + k]);
    const double o = detail::sigmoid(Z.data[3 * h + k]);
    const double c = f * C.data[k] + i * g;
    const double tc = std::tanh(c);
    act[k] = i;
    act[h + k] = f;
    act[2 * h + k] = g;
    act[3 * h + k] = o;
    act[4 * h + k] = tc;
    out.data[k] = o * tc;
    out.data[h + k] = c;
  }
  const bool req = t.requires_grad(z) || t.requires_grad(c_prev);
  return t.push(std::move(out), req, [z = z.id, cp = c_prev.id, h, act = std::move(act)](Tape& t, std::size_t o) {
    const auto& g = t.grad(o);
    const auto& C = t.value(cp);
    Tensor* dz = t.requires_grad(z) ? &t.grad(z) : nullptr;
    Tensor* dcp = t.requires_grad(cp) ? &t.grad(cp) : nullptr;
    for (std::size_t k = 0; k < h; ++k) {
      const double i = act[k], f = act[h + k], gg = act[2 * h + k], og = act[3 * h + k], tc = act[4 * h + k];
      const double dh = g.data[k];
      const double dc = g.data[h + k] + dh * og * (1.0 - tc * tc);
      if (dz) {
        dz->data[k] += dc * gg * i * (1.0 - i);
        dz->data[h + k] += dc * C.data[k] * f * (1.0 - f);
        dz->data[2 * h + k] += dc * i * (1.0 - gg * gg);
        dz->data[3 * h + k] += dh * tc * og * (1.0 - og);
      }
      if (dcp) dcp->data[k] += dc * f;
    }
  });
}

inline constexpr double kProbEpsilon = 1e-7;

/// Per-sample focal loss −α_t (1−p_t)^γ log p_t on a 1×1 probability, with
/// the probability clamped to [ε, 1−ε]; a clamped input has zero gradient.
inline double focal_value(double L, int y, double alpha, double gamma) {
  const double p = std::clamp(L, kProbEpsilon, 1.0 - kProbEpsilon);
  const double pt = y == 1 ? p : 1.0 - p;
  const double at = y == 1 ? alpha : 1.0 - alpha;
  return -at * std::pow(1.0 - pt, gamma) * std::log(pt);
}

/// d focal / d L, using the same clamp as `focal_value`.
inline double focal_derivative(double L, int y, double alpha, double gamma) {
  if (L < kProbEpsilon || L > 1.0 - kProbEpsilon) return 0.0;
  const double pt = y == 1 ? L : 1.0 - L;
  const double at = y == 1 ? alpha : 1.0 - alpha;
  const double q = 1.0 - pt;
  // d/dpt of −(1−pt)^γ log pt; the γ term vanishes when γ = 0.
  double d = -std::pow(q, gamma) / pt;
  if (gamma != 0.0) d += gamma * std::pow(q, gamma - 1.0) * std::log(pt);
  d *= at;
  return y == 1 ? d : -d;
}

inline Var focal_loss(Var prob, int y, double alpha, double gamma) {
  auto& t = *prob.tape;
  const auto& P = prob.value();
  if (P.size() != 1) throw Error("focal_loss: expected a scalar probability");
  Tensor out(1, 1, focal_value(P.data[0], y, alpha, gamma));
  return t.push(std::move(out), t.requires_grad(prob), [p = prob.id, y, alpha, gamma](Tape& t, std::size_t o) {
    t.grad(p).data[0] += t.grad(o).data[0] * focal_derivative(t.value(p).data[0], y, alpha, gamma);
  });
}

}  // namespace warnsift::nn
