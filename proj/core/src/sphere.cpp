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

#include "sphqmc/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphqmc {

namespace {

constexpr double kPoleRadiusSq = 1e-18;

void require_range(double v, double lo, double hi, bool hi_closed, const char* what) {
  const bool ok = v >= lo && (hi_closed ? v <= hi : v < hi);
  if (!ok) throw std::domain_error(std::string(what) + " outside its domain");
}

}  // namespace

bool on_unit_sphere(const SpherePoint& p, double tolerance) noexcept {
  const double n2 = p.x * p.x + p.y * p.y + p.z * p.z;
  return std::abs(n2 - 1.0) <= tolerance;
}

SpherePointSet::SpherePointSet(std::vector<SpherePoint> points,
                               std::optional<std::vector<Preimage>> preimages)
    : points_(std::move(points)), preimages_(std::move(preimages)) {
  if (points_.empty()) throw std::invalid_argument("sphere point set must be non-empty");
  for (const auto& p : points_) {
    if (!on_unit_sphere(p)) throw std::invalid_argument("point is not on the unit sphere");
  }
  if (!preimages_) return;
  if (preimages_->size() != points_.size()) {
    throw std::invalid_argument("preimage count differs from point count");
  }
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto& x = (*preimages_)[k];
    const SpherePoint q = map_phi(x[0], x[1]);
    const SpherePoint& p = points_[k];
    if (std::abs(q.x - p.x) > kUnitNormTolerance || std::abs(q.y - p.y) > kUnitNormTolerance ||
        std::abs(q.z - p.z) > kUnitNormTolerance) {
      throw std::invalid_argument("preimage does not map onto its point");
    }
  }
}

SphericalRectangle::SphericalRectangle(double t1, double t2, double p1, double p2)
    : theta1(t1), theta2(t2), phi1(p1), phi2(p2) {
  if (!(0.0 <= theta1 && theta1 < theta2 && theta2 <= 1.0 && 0.0 <= phi1 && phi1 < phi2 &&
        phi2 <= 1.0)) {
    throw std::invalid_argument("spherical rectangle bounds out of order");
  }
}

SphericalRectangle SphericalRectangle::from_square_box(double a1, double a2, double c1,
                                                       double c2) {
  auto to_phi = [](double c) { return std::acos(std::clamp(1.0 - 2.0 * c, -1.0, 1.0)) / std::numbers::pi; };
  return SphericalRectangle(a1, a2, to_phi(c1), to_phi(c2));
}

std::array<double, 2> cos_sin_turns(double turns) noexcept {
  const double quarters = turns * 4.0;
  const double q = std::nearbyint(quarters);
  const double angle = (quarters - q) * (std::numbers::pi / 2.0);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  switch (static_cast<long long>(q) & 3) {
    case 0: return {c + 0.0, s + 0.0};
    case 1: return {-s + 0.0, c + 0.0};
    case 2: return {-c + 0.0, -s + 0.0};
    default: return {s + 0.0, -c + 0.0};
  }
}

SpherePoint map_t(double theta, double phi) {
  require_range(theta, 0.0, 1.0, false, "theta");
  require_range(phi, 0.0, 1.0, true, "phi");
  const auto [c, s] = cos_sin_turns(theta);
  const auto [cp, sp] = cos_sin_turns(phi / 2.0);
  return {c * sp, s * sp, cp};
}

SpherePoint map_phi(double x1, double x2) {
  require_range(x1, 0.0, 1.0, false, "x1");
  require_range(x2, 0.0, 1.0, true, "x2");
  const auto [c, s] = cos_sin_turns(x1);
  const double r = 2.0 * std::sqrt(x2 - x2 * x2);
  return {c * r, s * r, 1.0 - 2.0 * x2};
}

SpherePointSet lift(const UnitSquarePointSet& points) {
  std::vector<SpherePoint> out;
  out.reserve(points.size());
  for (const auto& x : points.coords()) out.push_back(map_phi(x[0], x[1]));
  return SpherePointSet(std::move(out),
                        std::vector<SpherePointSet::Preimage>(points.coords().begin(),
                                                              points.coords().end()));
}

bool is_pole(const SpherePoint& p) noexcept { return p.x * p.x + p.y * p.y < kPoleRadiusSq; }

namespace {

double azimuth_turns(const SpherePoint& p) noexcept {
  if (is_pole(p)) return 0.0;
  double t = std::atan2(p.y, p.x) / (2.0 * std::numbers::pi);
  if (t < 0.0) t += 1.0;
  return t >= 1.0 ? 0.0 : t;
}

}  // namespace

std::array<double, 2> inverse_phi(const SpherePoint& p) noexcept {
  const double z = std::clamp(p.z, -1.0, 1.0);
  return {azimuth_turns(p), (1.0 - z) / 2.0};
}

std::array<double, 2> scaled_coordinates(const SpherePoint& p) noexcept {
  const double z = std::clamp(p.z, -1.0, 1.0);
  return {azimuth_turns(p), std::acos(z) / std::numbers::pi};
}

double rect_area(const SphericalRectangle& r) noexcept {
  // cos(pi phi1) - cos(pi phi2) = 2 sin(pi (phi1+phi2)/2) sin(pi (phi2-phi1)/2),
  // which avoids cancellation for thin bands.
  const double band = 2.0 * std::sin(std::numbers::pi * (r.phi1 + r.phi2) / 2.0) *
                      std::sin(std::numbers::pi * (r.phi2 - r.phi1) / 2.0);
  return std::clamp((r.theta2 - r.theta1) * band / 2.0, 0.0, 1.0);
}

bool rect_contains(const SphericalRectangle& r, const SpherePoint& p) noexcept {
  const auto [theta, phi] = scaled_coordinates(p);
  return r.theta1 <= theta && theta < r.theta2 && r.phi1 <= phi && phi < r.phi2;
}

}  // namespace sphqmc
