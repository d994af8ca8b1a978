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

#include "sphqmc/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphqmc/summation.hpp"

namespace sphqmc {

namespace {

using Coord = std::array<double, 2>;

/// Points that can fall inside some half-open box of [0,1)^2.
std::vector<Coord> countable(std::span<const Coord> points) {
  std::vector<Coord> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p[0] < 1.0 && p[1] < 1.0) out.push_back(p);
  }
  return out;
}

std::vector<double> distinct_sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t rank_of(const std::vector<double>& sorted, double v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                  sorted.begin());
}

std::vector<Coord> recovered_coordinates(const SpherePointSet& points) {
  std::vector<Coord> out;
  out.reserve(points.size());
  for (const auto& p : points.points()) out.push_back(inverse_phi(p));
  return out;
}

ExtremeResult extreme_or_bracket(std::span<const Coord> coords, std::size_t exact_limit,
                                 DiscrepancyKind kind) {
  if (coords.size() <= exact_limit) {
    return DiscrepancyValue{kind, extreme_discrepancy_exact(coords), true};
  }
  const double star = star_discrepancy_exact(coords);
  return DiscrepancyBracket{kind, star, 4.0 * star};
}

}  // namespace

std::string_view to_string(DiscrepancyKind kind) noexcept {
  switch (kind) {
    case DiscrepancyKind::planar_star: return "planar_star";
    case DiscrepancyKind::planar_extreme: return "planar_extreme";
    case DiscrepancyKind::sphere_rect_star: return "sphere_rect_star";
    case DiscrepancyKind::sphere_rect_extreme: return "sphere_rect_extreme";
    case DiscrepancyKind::cap_l2: return "cap_l2";
    case DiscrepancyKind::cui_freeden: return "cui_freeden";
  }
  return "unknown";
}

double star_discrepancy_exact(std::span<const Coord> points) {
  if (points.empty()) throw std::invalid_argument("star discrepancy of an empty set");
  const double n = static_cast<double>(points.size());
  const auto pts = countable(points);

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : pts) {
    xs.push_back(p[0]);
    ys.push_back(p[1]);
  }
  xs.push_back(1.0);
  ys.push_back(1.0);
  xs = distinct_sorted(std::move(xs));
  ys = distinct_sorted(std::move(ys));

  // by_column[i] lists the y-ranks of points whose x-rank is i.
  std::vector<std::vector<std::size_t>> by_column(xs.size());
  for (const auto& p : pts) by_column[rank_of(xs, p[0])].push_back(rank_of(ys, p[1]));

  // closed[j] = #{x <= xs[i], y <= ys[j]} for the current column i.
  std::vector<std::size_t> hist(ys.size(), 0);
  std::vector<std::size_t> closed(ys.size(), 0);
  std::vector<std::size_t> previous(ys.size(), 0);
  double best = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    previous.swap(closed);
    for (std::size_t r : by_column[i]) ++hist[r];
    std::size_t running = 0;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      running += hist[j];
      closed[j] = running;
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double area = xs[i] * ys[j];
      const double open = (i > 0 && j > 0) ? static_cast<double>(previous[j - 1]) : 0.0;
      best = std::max(best, static_cast<double>(closed[j]) / n - area);
      best = std::max(best, area - open / n);
    }
  }
  return best;
}

double extreme_discrepancy_exact(std::span<const Coord> points) {
  if (points.empty()) throw std::invalid_argument("extreme discrepancy of an empty set");
  const double n = static_cast<double>(points.size());
  auto pts = countable(points);
  std::sort(pts.begin(), pts.end(), [](const Coord& a, const Coord& b) {
    return a[1] < b[1] || (a[1] == b[1] && a[0] < b[0]);
  });

  std::vector<double> xs;
  for (const auto& p : pts) xs.push_back(p[0]);
  xs = distinct_sorted(std::move(xs));

  double best = 0.0;

  // Boxes holding too many points: closed slabs [xs[i], xs[j]], closed
  // y-ranges between point ordinates. Each is a limit of half-open boxes.
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) {
      const double lo = xs[i];
      const double hi = xs[j];
      const double width = hi - lo;
      double min_start = std::numeric_limits<double>::infinity();
      std::size_t count = 0;
      std::size_t k = 0;
      while (k < pts.size()) {
        const double v = pts[k][1];
        min_start = std::min(min_start, static_cast<double>(count) / n - width * v);
        for (; k < pts.size() && pts[k][1] == v; ++k) {
          if (pts[k][0] >= lo && pts[k][0] <= hi) ++count;
        }
        best = std::max(best, static_cast<double>(count) / n - width * v - min_start);
      }
    }
  }

  // Boxes holding too few points: open slabs (a1, a2) and open y-ranges,
  // with 0 and 1 available as edges.
  std::vector<double> left{0.0};
  left.insert(left.end(), xs.begin(), xs.end());
  left = distinct_sorted(std::move(left));
  std::vector<double> right(xs.begin(), xs.end());
  right.push_back(1.0);
  right = distinct_sorted(std::move(right));
  for (double lo : left) {
    for (double hi : right) {
      if (hi <= lo) continue;
      const double width = hi - lo;
      std::size_t count = 0;
      std::size_t k = 0;
      auto inside = [&](const Coord& p) { return p[0] > lo && p[0] < hi; };
      for (; k < pts.size() && pts[k][1] == 0.0; ++k) {
        if (inside(pts[k])) ++count;
      }
      double min_start = -static_cast<double>(count) / n;
      while (k < pts.size()) {
        const double v = pts[k][1];
        best = std::max(best, width * v - static_cast<double>(count) / n - min_start);
        for (; k < pts.size() && pts[k][1] == v; ++k) {
          if (inside(pts[k])) ++count;
        }
        min_start = std::min(min_start, width * v - static_cast<double>(count) / n);
      }
      best = std::max(best, width - static_cast<double>(count) / n - min_start);
    }
  }
  return best;
}

DiscrepancyValue star_discrepancy(const UnitSquarePointSet& points) {
  return {DiscrepancyKind::planar_star, star_discrepancy_exact(points.coords()), true};
}

ExtremeResult extreme_discrepancy(const UnitSquarePointSet& points, std::size_t exact_limit) {
  return extreme_or_bracket(points.coords(), exact_limit, DiscrepancyKind::planar_extreme);
}

DiscrepancyValue sphere_rect_star_discrepancy(const SpherePointSet& points) {
  const auto coords = recovered_coordinates(points);
  return {DiscrepancyKind::sphere_rect_star, star_discrepancy_exact(coords), true};
}

ExtremeResult sphere_rect_extreme_discrepancy(const SpherePointSet& points,
                                              std::size_t exact_limit) {
  const auto coords = recovered_coordinates(points);
  return extreme_or_bracket(coords, exact_limit, DiscrepancyKind::sphere_rect_extreme);
}

double sum_of_distances(std::span<const SpherePoint> points) {
  return symmetric_pair_sum(points, [](const SpherePoint& a, const SpherePoint& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
  });
}

double sum_of_distances(const SpherePointSet& points) { return sum_of_distances(points.points()); }

double checked_sqrt(double radicand) {
  if (radicand < -kRadicandTolerance) {
    throw std::runtime_error("negative radicand " + std::to_string(radicand) +
                             ": accumulation failure");
  }
  return std::sqrt(std::max(radicand, 0.0));
}

DiscrepancyValue cap_l2_discrepancy(const SpherePointSet& points) {
  const double n = static_cast<double>(points.size());
  const double mean_distance = sum_of_distances(points) / (n * n);
  return {DiscrepancyKind::cap_l2, checked_sqrt((4.0 / 3.0 - mean_distance) / 4.0), true};
}

DiscrepancyValue cui_freeden_discrepancy(const SpherePointSet& points, LogTermVariant variant) {
  const double n = static_cast<double>(points.size());
  const auto span = points.points();
  const double sum =
      variant == LogTermVariant::log_of_square
          ? symmetric_pair_sum(span,
                               [](const SpherePoint& a, const SpherePoint& b) {
                                 const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
                                 return 2.0 * std::log1p(std::sqrt(dx * dx + dy * dy + dz * dz) / 2.0);
                               })
          : symmetric_pair_sum(span, [](const SpherePoint& a, const SpherePoint& b) {
              const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
              const double l = std::log1p(std::sqrt(dx * dx + dy * dy + dz * dz) / 2.0);
              return l * l;
            });
  const double radicand = (1.0 - sum / (n * n)) / (4.0 * std::numbers::pi);
  return {DiscrepancyKind::cui_freeden, checked_sqrt(radicand), true};
}

double roth_lower_bound(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("roth_lower_bound needs N >= 1");
  const int floor_log2 = 63 - std::countl_zero(n);
  return (floor_log2 + 3) / (256.0 * static_cast<double>(n));
}

double net_extreme_upper_bound(std::uint32_t b, int m) {
  const double bb = b;
  const double bm = std::pow(bb, m);
  return bb * bb / (bb + 1.0) * m / bm + (9.0 + 1.0 / bb) / bm +
         (2.0 * bb - 1.0 - (4.0 * bb + 3.0) / ((bb + 1.0) * (bb + 1.0))) / (bm * bm);
}

double net_star_upper_bound(std::uint32_t b, int m) {
  const double bb = b;
  const double bm = std::pow(bb, m);
  return bb * bb / (bb + 1.0) * m / (4.0 * bm) + (9.0 / 4.0 + 1.0 / bb) / bm +
         (bb / 2.0 - 0.25 - (4.0 * bb + 3.0) / (4.0 * (bb + 1.0) * (bb + 1.0))) / (bm * bm);
}

double upper_value(const ExtremeResult& r) noexcept {
  if (const auto* v = std::get_if<DiscrepancyValue>(&r)) return v->value;
  return std::get<DiscrepancyBracket>(r).upper;
}

bool is_exact(const ExtremeResult& r) noexcept {
  return std::holds_alternative<DiscrepancyValue>(r);
}

}  // namespace sphqmc
