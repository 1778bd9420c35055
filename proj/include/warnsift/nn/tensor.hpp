#pragma once

// Dense row-major matrices of doubles. Vectors are 1×n.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "warnsift/common.hpp"

namespace warnsift::nn {

struct Tensor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
  Tensor(std::size_t r, std::size_t c, std::vector<double> values) : rows(r), cols(c), data(std::move(values)) {
    if (data.size() != r * c) throw Error("tensor data does not match its shape");
  }

  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }
  std::vector<std::size_t> shape() const { return {rows, cols}; }

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double* row(std::size_t r) { return data.data() + r * cols; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }

  void zero() { std::fill(data.begin(), data.end(), 0.0); }
  bool same_shape(const Tensor& o) const { return rows == o.rows && cols == o.cols; }
  bool all_finite() const {
    for (double v : data) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  bool operator==(const Tensor&) const = default;
};

inline Tensor uniform(std::size_t r, std::size_t c, double bound, std::mt19937_64& rng) {
  // Drawn by hand rather than std::uniform_real_distribution, whose output
  // sequence is not pinned by the standard.
  Tensor t(r, c);
  for (auto& v : t.data) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    v = (2.0 * u - 1.0) * bound;
  }
  return t;
}

}  // namespace warnsift::nn
