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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphqmc/discrepancy.hpp"
#include "sphqmc/netgen.hpp"
#include "sphqmc/sphere.hpp"
#include "sphqmc/summation.hpp"

namespace sphqmc {

/// Mean distance between two independent uniform points on S^2.
inline constexpr double kDistanceIntegral = 4.0 / 3.0;

[[nodiscard]] constexpr double distance_integral() noexcept { return kDistanceIntegral; }

/// Squared worst-case integration error of the equal-weight rule in the
/// Sobolev space with kernel 8/3 - ||y - z||:  4/3 - N^-2 sum ||z_k - z_l||.
[[nodiscard]] double worst_case_error_sq(const SpherePointSet& points);

/// Equal-weight rule (1/N) sum f(z_k). Returns f exactly when f is constant.
template <class F>
[[nodiscard]] double quadrature_apply(const SpherePointSet& points, F&& f) {
  const auto nodes = points.points();
  const double first = f(nodes.front());
  CompensatedSum deviation;
  for (std::size_t k = 1; k < nodes.size(); ++k) deviation.add(f(nodes[k]) - first);
  return first + deviation.value() / static_cast<double>(nodes.size());
}

/// Legendre polynomial P_l(t) with P_l(1) = 1, by three-term recurrence.
[[nodiscard]] double legendre_eval(int degree, double t);

/// Coefficients of the kernel 8/3 - ||z - z'|| = 2I - ||z - z'|| in the
/// zonal expansion sum_l lambda_l Z(2,l) P_l(<z,z'>), Z(2,l) = 2l + 1.
struct KernelCoefficients {
  int degree;
  /// lambda_0 = I, lambda_l = I (-(-1/2)_l) / (5/2)_l ~ l^-3 / 2.
  std::vector<double> lambda;
  /// lambda_l (2l + 1): the plain Legendre coefficients, 4 / ((2l-1)(2l+3)).
  std::vector<double> legendre;
};

/// Built by the ratio recurrence lambda_{l+1} = lambda_l (l - 1/2) / (l + 5/2), l >= 1.
[[nodiscard]] KernelCoefficients kernel_coefficients(int degree);

/// Truncated expansion sum_{l <= degree} lambda_l (2l+1) P_l(t).
[[nodiscard]] double kernel_eval(double t, int degree);
[[nodiscard]] double kernel_eval(double t, const KernelCoefficients& coefficients);

/// 8/3 - sqrt(2 - 2t), the closed form of the full expansion.
[[nodiscard]] double kernel_closed_form(double t);

/// Independent uniform points: z ~ U[-1,1], azimuth ~ U[0, 2 pi).
[[nodiscard]] SpherePointSet random_sphere_points(std::size_t count, std::uint64_t seed);

/// Uniform double in [0,1) from the top 53 bits of a 64-bit word.
[[nodiscard]] constexpr double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Recipe used by convergence_table.
struct NetRecipe {
  PrimeBase base{2};
  std::optional<std::uint64_t> scramble_seed;
  std::size_t extreme_exact_limit = kDefaultExtremeExactLimit;
};

[[nodiscard]] std::string matrices_name(const NetRecipe& recipe);

/// Identity/Pascal net with b^m points, scrambled if the recipe asks for it.
[[nodiscard]] UnitSquarePointSet make_net(const NetRecipe& recipe, int m);

struct QualityReport {
  int m = 0;
  std::uint64_t n = 0;
  double e2 = 0.0;
  /// N^{3/2} e2
  double e2_scaled = 0.0;
  std::map<DiscrepancyKind, ExtremeResult> discrepancies;
  std::map<std::string, std::string> generator_metadata;
};

/// Evaluate the requested discrepancy kinds for a lifted net.
[[nodiscard]] ExtremeResult measure_kind(DiscrepancyKind kind, const UnitSquarePointSet& square,
                                         const SpherePointSet& sphere,
                                         std::size_t extreme_exact_limit);

/// One report per m, in the order given.
[[nodiscard]] std::vector<QualityReport> convergence_table(
    std::span<const int> m_values, const NetRecipe& recipe,
    std::span<const DiscrepancyKind> kinds = {});

/// Ordinary least-squares slope of log(values) against log(sizes).
[[nodiscard]] double loglog_slope(std::span<const double> sizes, std::span<const double> values);

}  // namespace sphqmc
