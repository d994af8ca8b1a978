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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "sphqmc/netgen.hpp"
#include "sphqmc/sphere.hpp"

namespace sphqmc {

enum class DiscrepancyKind {
  planar_star,
  planar_extreme,
  sphere_rect_star,
  sphere_rect_extreme,
  cap_l2,
  cui_freeden,
};

[[nodiscard]] std::string_view to_string(DiscrepancyKind kind) noexcept;

struct DiscrepancyValue {
  DiscrepancyKind kind;
  double value;
  /// Exhaustive enumeration or closed form, as opposed to a bracket.
  bool exact;
};

/// Two-sided enclosure D* <= D <= 4 D* used when exact evaluation is too costly.
struct DiscrepancyBracket {
  DiscrepancyKind kind;
  double lower;
  double upper;
};

using ExtremeResult = std::variant<DiscrepancyValue, DiscrepancyBracket>;

inline constexpr std::size_t kDefaultStarExactLimit = 4096;
inline constexpr std::size_t kDefaultExtremeExactLimit = 512;

/// Radicands below this are treated as a logic error rather than rounding.
inline constexpr double kRadicandTolerance = 1e-12;

// Planar kernels on raw coordinates. A point with a coordinate >= 1 is
// never inside a test box but still counts toward N.

/// Exact sup over anchored boxes [0,a) x [0,c), O(N^2).
[[nodiscard]] double star_discrepancy_exact(std::span<const std::array<double, 2>> points);

/// Exact sup over all boxes [a1,a2) x [c1,c2), O(N^3).
[[nodiscard]] double extreme_discrepancy_exact(std::span<const std::array<double, 2>> points);

[[nodiscard]] DiscrepancyValue star_discrepancy(const UnitSquarePointSet& points);

[[nodiscard]] ExtremeResult extreme_discrepancy(
    const UnitSquarePointSet& points, std::size_t exact_limit = kDefaultExtremeExactLimit);

/// Evaluated from the sphere points themselves; preimages are ignored.
[[nodiscard]] DiscrepancyValue sphere_rect_star_discrepancy(const SpherePointSet& points);

[[nodiscard]] ExtremeResult sphere_rect_extreme_discrepancy(
    const SpherePointSet& points, std::size_t exact_limit = kDefaultExtremeExactLimit);

/// Sum of ||z_k - z_l|| over all ordered pairs. Compensated per-row sums
/// combined in a fixed tree, so the result does not depend on thread count.
[[nodiscard]] double sum_of_distances(std::span<const SpherePoint> points);
[[nodiscard]] double sum_of_distances(const SpherePointSet& points);

/// Spherical cap L2-discrepancy from the sum of distances.
[[nodiscard]] DiscrepancyValue cap_l2_discrepancy(const SpherePointSet& points);

/// Reading of the log term in the Cui-Freeden formula.
enum class LogTermVariant {
  log_of_square,  ///< ln((1 + d/2)^2)
  square_of_log,  ///< (ln(1 + d/2))^2
};

/// D with 4 pi D^2 = 1 - N^-2 sum_{k,l} logterm(||z_l - z_k||).
[[nodiscard]] DiscrepancyValue cui_freeden_discrepancy(
    const SpherePointSet& points, LogTermVariant variant = LogTermVariant::log_of_square);

/// sqrt(radicand), clamping values in [-kRadicandTolerance, 0) to zero.
/// Throws std::runtime_error for anything more negative.
[[nodiscard]] double checked_sqrt(double radicand);

/// (floor(log2 N) + 3) / (2^8 N): no N-point set has smaller star discrepancy.
[[nodiscard]] double roth_lower_bound(std::uint64_t n);

/// Upper bound on the extreme spherical rectangle discrepancy of a lifted
/// (0,m,2)-net in base b.
[[nodiscard]] double net_extreme_upper_bound(std::uint32_t b, int m);

/// Upper bound on the spherical rectangle star discrepancy of a lifted
/// (0,m,2)-net in base b.
[[nodiscard]] double net_star_upper_bound(std::uint32_t b, int m);

/// Value of a DiscrepancyValue, or the upper end of a bracket.
[[nodiscard]] double upper_value(const ExtremeResult& r) noexcept;
[[nodiscard]] bool is_exact(const ExtremeResult& r) noexcept;

}  // namespace sphqmc
