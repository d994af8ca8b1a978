// Copyright 2026 The sphqmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

namespace sphqmc {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Pairwise sum with a tree fixed by the input length only.
[[nodiscard]] inline double tree_sum(std::span<const double> values) noexcept {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    CompensatedSum s;
    for (double v : values) s.add(v);
    return s.value();
  }
  const std::size_t half = values.size() / 2;
  return tree_sum(values.first(half)) + tree_sum(values.subspan(half));
}

/// sum_{k != l} f(p_k, p_l) for symmetric f, i.e. 2 * sum_{k<l}.
///
/// Each row k < l is accumulated sequentially and the row totals are
/// combined by tree_sum, so the result is bit-identical for any `threads`.
/// `threads == 0` picks the hardware concurrency.
template <class Point, class F>
[[nodiscard]] double symmetric_pair_sum(std::span<const Point> points, F f,
                                        unsigned threads = 0) {
  const std::size_t n = points.size();
  std::vector<double> rows(n, 0.0);
  auto row = [&](std::size_t k) {
    CompensatedSum s;
    const Point& a = points[k];
    for (std::size_t l = k + 1; l < n; ++l) s.add(f(a, points[l]));
    rows[k] = s.value();
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (n < 256) threads = 1;
  if (threads == 1) {
    for (std::size_t k = 0; k < n; ++k) row(k);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < n; k += threads) row(k);
      });
    }
  }
  return 2.0 * tree_sum(rows);
}

}  // namespace sphqmc
