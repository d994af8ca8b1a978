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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sphqmc/netgen.hpp"
#include "sphqmc/sphere.hpp"

using namespace sphqmc;
using doctest::Approx;

namespace {

void check_point(const SpherePoint& p, double x, double y, double z) {
  CHECK(p.x == Approx(x).epsilon(1e-15));
  CHECK(p.y == Approx(y).epsilon(1e-15));
  CHECK(p.z == Approx(z).epsilon(1e-15));
}

}  // namespace

TEST_CASE("quarter-turn trigonometry is exact") {
  CHECK(cos_sin_turns(0.0) == std::array<double, 2>{1.0, 0.0});
  CHECK(cos_sin_turns(0.25) == std::array<double, 2>{0.0, 1.0});
  CHECK(cos_sin_turns(0.5) == std::array<double, 2>{-1.0, 0.0});
  CHECK(cos_sin_turns(0.75) == std::array<double, 2>{0.0, -1.0});
  const auto [c, s] = cos_sin_turns(0.125);
  CHECK(c == Approx(std::sqrt(0.5)));
  CHECK(s == Approx(std::sqrt(0.5)));
  CHECK_FALSE(std::signbit(cos_sin_turns(0.5)[1]));
}

TEST_CASE("map_t") {
  check_point(map_t(0, 0), 0, 0, 1);
  check_point(map_t(0, 1), 0, 0, -1);
  check_point(map_t(0.25, 0.5), 0, 1, 0);
  CHECK_THROWS_AS((void)map_t(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS((void)map_t(0.5, 1.5), std::domain_error);
  CHECK_THROWS_AS((void)map_t(-0.1, 0.5), std::domain_error);
}

TEST_CASE("map_phi") {
  check_point(map_phi(0, 0), 0, 0, 1);
  check_point(map_phi(0.5, 0.5), -1, 0, 0);
  check_point(map_phi(0.25, 0.75), 0, std::sqrt(3.0) / 2, -0.5);
  check_point(map_phi(0.75, 0.25), 0, -std::sqrt(3.0) / 2, 0.5);
  check_point(map_phi(0.3, 1.0), 0, 0, -1);
  CHECK_THROWS_AS((void)map_phi(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)map_phi(0.0, std::nan("")), std::domain_error);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u;
  for (int i = 0; i < 1000; ++i) {
    const double x1 = u(rng), x2 = u(rng);
    CHECK(on_unit_sphere(map_phi(x1, x2)));
    // Phi(x1, x2) = T(x1, arccos(1 - 2 x2) / pi).
    const auto a = map_phi(x1, x2);
    const auto b = map_t(x1, std::acos(1 - 2 * x2) / std::numbers::pi);
    CHECK(oracle::distance(a, b) < 1e-12);
  }
}

TEST_CASE("lift") {
  const PrimeBase two(2);
  const auto s1 = lift(digital_net(DigitalNetSpec::identity_pascal(two, 1)));
  REQUIRE(s1.size() == 2);
  check_point(s1.points()[0], 0, 0, 1);
  check_point(s1.points()[1], -1, 0, 0);
  REQUIRE(s1.preimages().has_value());
  CHECK((*s1.preimages())[1] == std::array<double, 2>{0.5, 0.5});

  const auto s2 = lift(digital_net(DigitalNetSpec::identity_pascal(two, 2)));
  check_point(s2.points()[2], 0, std::sqrt(3.0) / 2, -0.5);
  check_point(s2.points()[3], 0, -std::sqrt(3.0) / 2, 0.5);
}

TEST_CASE("sphere point set validation") {
  CHECK_THROWS_AS(SpherePointSet({}), std::invalid_argument);
  CHECK_THROWS_AS(SpherePointSet({{1.0, 1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SpherePointSet({{0, 0, 1}}, std::vector<SpherePointSet::Preimage>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpherePointSet({{0, 0, 1}}, std::vector<SpherePointSet::Preimage>{{0.5, 0.5}}),
                  std::invalid_argument);
  CHECK_NOTHROW(SpherePointSet({{0, 0, 1}}, std::vector<SpherePointSet::Preimage>{{0.0, 0.0}}));
}

TEST_CASE("inverse_phi") {
  CHECK(inverse_phi({0, 0, 1}) == std::array<double, 2>{0, 0});
  CHECK(inverse_phi({0, 0, -1}) == std::array<double, 2>{0, 1});
  const auto a = inverse_phi({-1, 0, 0});
  CHECK(a[0] == Approx(0.5).epsilon(1e-15));
  CHECK(a[1] == 0.5);
  const auto b = inverse_phi({0, std::sqrt(3.0) / 2, -0.5});
  CHECK(b[0] == Approx(0.25).epsilon(1e-15));
  CHECK(b[1] == Approx(0.75).epsilon(1e-15));
  // Azimuth just below a full turn stays in [0, 1).
  const auto c = inverse_phi({1.0, -1e-300, 0.0});
  CHECK(c[0] >= 0.0);
  CHECK(c[0] < 1.0);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 2000; ++i) {
    const double x1 = u(rng), x2 = u(rng);
    const auto back = inverse_phi(map_phi(x1, x2));
    CHECK(std::abs(back[0] - x1) < kRoundTripTolerance);
    CHECK(std::abs(back[1] - x2) < kRoundTripTolerance);
  }
}

TEST_CASE("spherical rectangle area") {
  CHECK(rect_area({0, 1, 0, 1}) == Approx(1.0).epsilon(1e-15));
  CHECK(rect_area({0, 1, 0, 0.5}) == Approx(0.5).epsilon(1e-15));
  CHECK(rect_area({0.25, 0.5, 0.5, 1}) == Approx(0.125).epsilon(1e-15));
  CHECK_THROWS_AS(SphericalRectangle(0.5, 0.5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SphericalRectangle(0, 1, 0.2, 1.1), std::invalid_argument);

  // Area preservation: the image of [a1,a2) x [c1,c2) has area (a2-a1)(c2-c1).
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u;
  for (int i = 0; i < 2000; ++i) {
    double a1 = u(rng), a2 = u(rng), c1 = u(rng), c2 = u(rng);
    if (a1 == a2 || c1 == c2) continue;
    if (a1 > a2) std::swap(a1, a2);
    if (c1 > c2) std::swap(c1, c2);
    const auto r = SphericalRectangle::from_square_box(a1, a2, c1, c2);
    CHECK(rect_area(r) == Approx((a2 - a1) * (c2 - c1)).epsilon(1e-12));
  }
}

TEST_CASE("rectangle membership") {
  const SphericalRectangle whole(0, 1, 0, 1);
  CHECK(rect_contains(whole, {0, 0, 1}));
  CHECK(rect_contains(whole, {-1, 0, 0}));
  CHECK_FALSE(rect_contains(whole, {0, 0, -1}));
  // Anchored rectangles always hold the north pole, never the south pole.
  CHECK(rect_contains({0, 0.01, 0, 0.01}, {0, 0, 1}));
  CHECK_FALSE(rect_contains({0.3, 0.4, 0.5, 1.0}, {0, 0, -1}));
}

TEST_CASE("lifted boxes contain exactly the lifted points of the box") {
  // Membership is preserved pointwise away from box edges, so counts and
  // areas agree: the map is measure preserving.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u;
  int agree = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    double a1 = u(rng), a2 = u(rng), c1 = u(rng), c2 = u(rng);
    if (a1 > a2) std::swap(a1, a2);
    if (c1 > c2) std::swap(c1, c2);
    if (a2 - a1 < 1e-3 || c2 - c1 < 1e-3) continue;
    const auto r = SphericalRectangle::from_square_box(a1, a2, c1, c2);
    for (int k = 0; k < 200; ++k) {
      const double x1 = u(rng), x2 = u(rng);
      const bool square = a1 <= x1 && x1 < a2 && c1 <= x2 && x2 < c2;
      agree += square == rect_contains(r, map_phi(x1, x2));
      ++total;
    }
  }
  CHECK(agree == total);

  // Empirical measure of a fixed zonal rectangle under uniform sphere
  // sampling matches its area.
  const SphericalRectangle r(0.1, 0.6, 0.2, 0.7);
  int hits = 0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) hits += rect_contains(r, oracle::gaussian_sphere_point(rng));
  const double p = rect_area(r);
  const double se = std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(static_cast<double>(hits) / n - p) < 4 * se);
}
