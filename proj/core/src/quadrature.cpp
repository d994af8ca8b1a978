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

#include "sphqmc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sphqmc {

double worst_case_error_sq(const SpherePointSet& points) {
  const double n = static_cast<double>(points.size());
  const double e2 = kDistanceIntegral - sum_of_distances(points) / (n * n);
  if (e2 < -kRadicandTolerance) {
    throw std::runtime_error("negative squared worst-case error: accumulation failure");
  }
  return std::max(e2, 0.0);
}

double legendre_eval(int degree, double t) {
  if (degree < 0) throw std::invalid_argument("Legendre degree must be >= 0");
  if (degree == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int l = 1; l < degree; ++l) {
    const double next = ((2.0 * l + 1.0) * t * cur - l * prev) / (l + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

KernelCoefficients kernel_coefficients(int degree) {
  if (degree < 0) throw std::invalid_argument("kernel truncation degree must be >= 0");
  const auto size = static_cast<std::size_t>(degree) + 1;
  KernelCoefficients k{degree, std::vector<double>(size), std::vector<double>(size)};
  k.lambda[0] = kDistanceIntegral;
  // lambda_0 is not of Pochhammer form; the quotient starts at
  // lambda_1 = I (1/2) / (5/2).
  if (degree >= 1) k.lambda[1] = kDistanceIntegral / 5.0;
  for (std::size_t l = 1; l + 1 < size; ++l) {
    const double ld = static_cast<double>(l);
    k.lambda[l + 1] = k.lambda[l] * (ld - 0.5) / (ld + 2.5);
  }
  for (std::size_t l = 0; l < size; ++l) {
    k.legendre[l] = k.lambda[l] * (2.0 * static_cast<double>(l) + 1.0);
  }
  return k;
}

double kernel_eval(double t, const KernelCoefficients& coefficients) {
  double prev = 1.0;
  double cur = t;
  CompensatedSum sum;
  sum.add(coefficients.legendre[0]);
  if (coefficients.degree >= 1) sum.add(coefficients.legendre[1] * t);
  for (int l = 1; l < coefficients.degree; ++l) {
    const double next = ((2.0 * l + 1.0) * t * cur - l * prev) / (l + 1.0);
    prev = cur;
    cur = next;
    sum.add(coefficients.legendre[static_cast<std::size_t>(l) + 1] * cur);
  }
  return sum.value();
}

double kernel_eval(double t, int degree) { return kernel_eval(t, kernel_coefficients(degree)); }

double kernel_closed_form(double t) { return 8.0 / 3.0 - std::sqrt(std::max(0.0, 2.0 - 2.0 * t)); }

SpherePointSet random_sphere_points(std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("random_sphere_points needs N >= 1");
  std::mt19937_64 rng(seed);
  std::vector<SpherePoint> pts;
  pts.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double z = 2.0 * unit_interval(rng()) - 1.0;
    const auto [c, s] = cos_sin_turns(unit_interval(rng()));
    const double r = std::sqrt((1.0 - z) * (1.0 + z));
    pts.push_back({c * r, s * r, z});
  }
  return SpherePointSet(std::move(pts));
}

std::string matrices_name(const NetRecipe&) { return "identity_pascal"; }

UnitSquarePointSet make_net(const NetRecipe& recipe, int m) {
  auto net = digital_net(DigitalNetSpec::identity_pascal(recipe.base, m));
  if (recipe.scramble_seed) {
    net = scramble(net, ScrambleState::from_seed(recipe.base, std::max(m, scramble_depth(recipe.base)),
                                                     *recipe.scramble_seed));
  }
  return net;
}

ExtremeResult measure_kind(DiscrepancyKind kind, const UnitSquarePointSet& square,
                           const SpherePointSet& sphere, std::size_t extreme_exact_limit) {
  switch (kind) {
    case DiscrepancyKind::planar_star: return star_discrepancy(square);
    case DiscrepancyKind::planar_extreme: return extreme_discrepancy(square, extreme_exact_limit);
    case DiscrepancyKind::sphere_rect_star: return sphere_rect_star_discrepancy(sphere);
    case DiscrepancyKind::sphere_rect_extreme:
      return sphere_rect_extreme_discrepancy(sphere, extreme_exact_limit);
    case DiscrepancyKind::cap_l2: return cap_l2_discrepancy(sphere);
    case DiscrepancyKind::cui_freeden: return cui_freeden_discrepancy(sphere);
  }
  throw std::invalid_argument("unknown discrepancy kind");
}

std::vector<QualityReport> convergence_table(std::span<const int> m_values,
                                             const NetRecipe& recipe,
                                             std::span<const DiscrepancyKind> kinds) {
  std::vector<QualityReport> reports;
  reports.reserve(m_values.size());
  for (int m : m_values) {
    const auto square = make_net(recipe, m);
    const auto sphere = lift(square);
    QualityReport r;
    r.m = m;
    r.n = square.size();
    r.e2 = worst_case_error_sq(sphere);
    r.e2_scaled = r.e2 * std::pow(static_cast<double>(r.n), 1.5);
    for (DiscrepancyKind kind : kinds) {
      r.discrepancies.emplace(kind, measure_kind(kind, square, sphere, recipe.extreme_exact_limit));
    }
    r.generator_metadata = {
        {"base", std::to_string(recipe.base.value())},
        {"m", std::to_string(m)},
        {"matrices", matrices_name(recipe)},
    };
    if (recipe.scramble_seed) {
      r.generator_metadata["scramble_seed"] = std::to_string(*recipe.scramble_seed);
      r.generator_metadata["scramble_rng"] = std::string(kScrambleRngName);
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

double loglog_slope(std::span<const double> sizes, std::span<const double> values) {
  if (sizes.size() != values.size() || sizes.size() < 2) {
    throw std::invalid_argument("loglog_slope needs two equal-length series of length >= 2");
  }
  const double n = static_cast<double>(sizes.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const double x = std::log(sizes[k]);
    const double y = std::log(values[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace sphqmc
