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
#include <optional>
#include <span>
#include <vector>

#include "sphqmc/netgen.hpp"

namespace sphqmc {

inline constexpr double kUnitNormTolerance = 1e-12;
inline constexpr double kRoundTripTolerance = 1e-9;

struct SpherePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

[[nodiscard]] bool on_unit_sphere(const SpherePoint& p,
                                  double tolerance = kUnitNormTolerance) noexcept;

/// Unit vectors, optionally paired with the unit-square points they were
/// lifted from.
class SpherePointSet {
 public:
  using Preimage = std::array<double, 2>;

  /// Throws std::invalid_argument if empty, off the sphere, or if the
  /// preimage list has the wrong length or does not map onto the points.
  explicit SpherePointSet(std::vector<SpherePoint> points,
                          std::optional<std::vector<Preimage>> preimages = std::nullopt);

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] std::span<const SpherePoint> points() const noexcept { return points_; }
  [[nodiscard]] const std::optional<std::vector<Preimage>>& preimages() const noexcept {
    return preimages_;
  }

 private:
  std::vector<SpherePoint> points_;
  std::optional<std::vector<Preimage>> preimages_;
};

/// Zonal region {T(theta, phi) : theta1 <= theta < theta2, phi1 <= phi < phi2}
/// in scaled spherical coordinates.
struct SphericalRectangle {
  /// Throws std::invalid_argument unless 0 <= theta1 < theta2 <= 1 and
  /// 0 <= phi1 < phi2 <= 1.
  SphericalRectangle(double theta1, double theta2, double phi1, double phi2);

  /// Image under the area-preserving lift of [a1,a2) x [c1,c2).
  static SphericalRectangle from_square_box(double a1, double a2, double c1, double c2);

  double theta1;
  double theta2;
  double phi1;
  double phi2;
};

/// cos(2 pi turns), sin(2 pi turns), exact at multiples of a quarter turn.
[[nodiscard]] std::array<double, 2> cos_sin_turns(double turns) noexcept;

/// (cos 2pi theta sin pi phi, sin 2pi theta sin pi phi, cos pi phi).
/// Throws std::domain_error unless theta in [0,1) and phi in [0,1].
[[nodiscard]] SpherePoint map_t(double theta, double phi);

/// Area-preserving lift of the unit square; north pole at x2 = 0.
/// Throws std::domain_error unless x1 in [0,1) and x2 in [0,1].
[[nodiscard]] SpherePoint map_phi(double x1, double x2);

[[nodiscard]] SpherePointSet lift(const UnitSquarePointSet& points);

/// Preimage under map_phi; the azimuth coordinate is 0 at the poles.
[[nodiscard]] std::array<double, 2> inverse_phi(const SpherePoint& p) noexcept;

/// Scaled coordinates (theta, phi) of a point; theta is 0 at the poles.
[[nodiscard]] std::array<double, 2> scaled_coordinates(const SpherePoint& p) noexcept;

/// Normalized area: (theta2 - theta1)(cos pi phi1 - cos pi phi2) / 2.
[[nodiscard]] double rect_area(const SphericalRectangle& r) noexcept;

/// Half-open membership computed from the point's own coordinates.
[[nodiscard]] bool rect_contains(const SphericalRectangle& r, const SpherePoint& p) noexcept;

/// True for points within the pole tolerance of the z axis.
[[nodiscard]] bool is_pole(const SpherePoint& p) noexcept;

}  // namespace sphqmc
