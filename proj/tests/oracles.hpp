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

// Slow, direct reference computations. They share no code with the
// library beyond the data types, so agreement is meaningful.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "sphqmc/sphere.hpp"

namespace sphqmc::oracle {

using Coord = std::array<double, 2>;

inline std::size_t count_in_box(std::span<const Coord> pts, double a1, double a2, double c1,
                                double c2) {
  std::size_t k = 0;
  for (const auto& p : pts) {
    if (p[0] >= a1 && p[0] < a2 && p[1] >= c1 && p[1] < c2) ++k;
  }
  return k;
}

/// Edges at which a half-open count can change: each coordinate and the
/// next double above it, plus the box limits.
inline std::vector<double> candidate_edges(std::span<const Coord> pts, int axis) {
  std::vector<double> e{0.0, 1.0};
  for (const auto& p : pts) {
    e.push_back(p[axis]);
    e.push_back(std::nextafter(p[axis], 2.0));
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  std::erase_if(e, [](double v) { return v > 1.0; });
  return e;
}

/// sup over [0,a) x [0,c) by direct counting on every candidate corner.
inline double star_discrepancy(std::span<const Coord> pts) {
  const auto ea = candidate_edges(pts, 0);
  const auto ec = candidate_edges(pts, 1);
  const double n = static_cast<double>(pts.size());
  double best = 0.0;
  for (double a : ea) {
    for (double c : ec) {
      const double d = std::abs(static_cast<double>(count_in_box(pts, 0, a, 0, c)) / n - a * c);
      best = std::max(best, d);
    }
  }
  return best;
}

/// sup over all [a1,a2) x [c1,c2), O(N^5).
inline double extreme_discrepancy(std::span<const Coord> pts) {
  const auto ea = candidate_edges(pts, 0);
  const auto ec = candidate_edges(pts, 1);
  const double n = static_cast<double>(pts.size());
  double best = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    for (std::size_t j = i + 1; j < ea.size(); ++j) {
      for (std::size_t k = 0; k < ec.size(); ++k) {
        for (std::size_t l = k + 1; l < ec.size(); ++l) {
          const double area = (ea[j] - ea[i]) * (ec[l] - ec[k]);
          const double frac =
              static_cast<double>(count_in_box(pts, ea[i], ea[j], ec[k], ec[l])) / n;
          best = std::max(best, std::abs(frac - area));
        }
      }
    }
  }
  return best;
}

inline double distance(const SpherePoint& a, const SpherePoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

/// Plain double loop over ordered pairs, long double accumulator.
inline double sum_of_distances(std::span<const SpherePoint> pts) {
  long double s = 0;
  for (const auto& a : pts) {
    for (const auto& b : pts) s += distance(a, b);
  }
  return static_cast<double>(s);
}

/// Squared cap L2 discrepancy by direct evaluation of
///   int_{S^2} int_{-1}^{1} (#{k : <z_k, z> <= t} / N - (1 + t) / 2)^2 dt dsigma(z).
/// The t-integral is exact (piecewise quadratic between sorted inner
/// products); the sphere integral is a midpoint rule in the height and a
/// trapezoid rule in the azimuth.
inline double cap_l2_squared(std::span<const SpherePoint> pts, int height_nodes,
                             int azimuth_nodes) {
  const double n = static_cast<double>(pts.size());
  // int_{lo}^{hi} (q - (1+t)/2)^2 dt with u = (1+t)/2: 2 [(u - q)^3 / 3].
  auto piece = [](double q, double lo, double hi) {
    const double ulo = (1.0 + lo) / 2.0 - q;
    const double uhi = (1.0 + hi) / 2.0 - q;
    return 2.0 * (uhi * uhi * uhi - ulo * ulo * ulo) / 3.0;
  };
  std::vector<double> dots(pts.size());
  long double total = 0;
  for (int i = 0; i < height_nodes; ++i) {
    const double h = -1.0 + (2.0 * i + 1.0) / height_nodes;
    const double r = std::sqrt(std::max(0.0, 1.0 - h * h));
    for (int j = 0; j < azimuth_nodes; ++j) {
      const double psi = 2.0 * std::numbers::pi * j / azimuth_nodes;
      const SpherePoint z{r * std::cos(psi), r * std::sin(psi), h};
      for (std::size_t k = 0; k < pts.size(); ++k) {
        dots[k] = std::clamp(pts[k].x * z.x + pts[k].y * z.y + pts[k].z * z.z, -1.0, 1.0);
      }
      std::sort(dots.begin(), dots.end());
      double lo = -1.0;
      double inner = 0.0;
      for (std::size_t k = 0; k < dots.size(); ++k) {
        inner += piece(static_cast<double>(k) / n, lo, dots[k]);
        lo = dots[k];
      }
      inner += piece(1.0, lo, 1.0);
      total += inner;
    }
  }
  // dsigma = dh dpsi / (4 pi); cell weights (2 / H)(2 pi / A).
  return static_cast<double>(total) * (2.0 / height_nodes) * (2.0 * std::numbers::pi / azimuth_nodes) /
         (4.0 * std::numbers::pi);
}

/// Uniform point on S^2 by normalising a Gaussian vector.
template <class Rng>
SpherePoint gaussian_sphere_point(Rng& rng) {
  std::normal_distribution<double> g;
  const double x = g(rng), y = g(rng), z = g(rng);
  const double r = std::hypot(x, y, z);
  return {x / r, y / r, z / r};
}

/// Simpson's rule on [a, b] with an even number of panels.
template <class F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace sphqmc::oracle
