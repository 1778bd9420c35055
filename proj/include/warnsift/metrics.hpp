#pragma once

// Per-class precision/recall/F1 and the inverse-frequency weighted overall.

#include <array>
#include <optional>
#include <vector>

#include "warnsift/common.hpp"

namespace warnsift {

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  bool operator==(const ConfusionCounts&) const = default;
};

/// Percentages; a metric with a zero denominator is absent.
struct ClassMetrics {
  std::optional<double> precision, recall, f1;
  std::size_t support = 0;  // samples whose label is this class
};

struct MetricsReport {
  ClassMetrics sensitive, insensitive;
  std::optional<double> precision, recall, f1;  // weighted overall
  ConfusionCounts counts;                       // with the sensitive class as positive
};

inline ClassMetrics class_metrics(std::size_t tp, std::size_t fp, std::size_t fn) {
  ClassMetrics m;
  m.support = tp + fn;
  if (m.support == 0) return m;  // class absent from the labels: undefined
  if (tp + fp > 0) m.precision = 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn > 0) m.recall = 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fn);
  if (m.precision && m.recall) {
    const double s = *m.precision + *m.recall;
    m.f1 = s > 0 ? 2.0 * *m.precision * *m.recall / s : 0.0;
  } else {
    // Never predicted: precision undefined, F1 taken as 0.
    m.f1 = 0.0;
  }
  return m;
}

/// Σ_c w_c m_c with w_c = (1/n_c) / Σ_k (1/n_k) over classes with n_c > 0
/// and a defined metric.
inline std::optional<double> weighted_overall(const std::vector<std::pair<std::optional<double>, std::size_t>>& per_class) {
  double num = 0.0, den = 0.0;
  for (const auto& [value, n] : per_class) {
    if (!value || n == 0) continue;
    const double w = 1.0 / static_cast<double>(n);
    num += w * *value;
    den += w;
  }
  if (den == 0.0) return std::nullopt;
  return num / den;
}

/// `predictions` and `labels` hold 1 for bug-sensitive and 0 otherwise.
inline MetricsReport compute_metrics(const std::vector<int>& predictions, const std::vector<int>& labels) {
  if (predictions.size() != labels.size()) throw Error("compute_metrics: predictions and labels differ in length");
  if (labels.empty()) throw Error("compute_metrics: no samples");
  MetricsReport r;
  auto& c = r.counts;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool p = predictions[i] != 0, y = labels[i] != 0;
    if (p && y) ++c.tp;
    else if (p) ++c.fp;
    else if (y) ++c.fn;
    else ++c.tn;
  }
  r.sensitive = class_metrics(c.tp, c.fp, c.fn);
  r.insensitive = class_metrics(c.tn, c.fn, c.fp);
  const std::size_t ns = r.sensitive.support, ni = r.insensitive.support;
  // A present class that is never predicted contributes precision 0.
  auto present = [](const std::optional<double>& v, std::size_t n) { return n ? v.value_or(0.0) : v; };
  r.precision = weighted_overall({{present(r.sensitive.precision, ns), ns}, {present(r.insensitive.precision, ni), ni}});
  r.recall = weighted_overall({{r.sensitive.recall, ns}, {r.insensitive.recall, ni}});
  r.f1 = weighted_overall({{r.sensitive.f1, ns}, {r.insensitive.f1, ni}});
  return r;
}

}  // namespace warnsift
