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

#include "sphqmc/netgen.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace sphqmc {

namespace {

std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t bound) {
  // Rejection keeps draws unbiased and independent of the standard
  // library's distribution implementation.
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return static_cast<std::uint32_t>(r % bound);
  }
}

GenMatrix random_lower_triangular(PrimeBase base, int m, std::mt19937_64& rng) {
  const std::uint32_t b = base.value();
  std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(m),
                                               std::vector<std::uint32_t>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) rows[i][j] = uniform_below(rng, b);
    rows[i][i] = 1 + uniform_below(rng, b - 1);
  }
  return GenMatrix(base, std::move(rows));
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeBase::PrimeBase(std::uint32_t b) : b_(b) {
  if (!is_prime(b)) {
    throw std::invalid_argument("base " + std::to_string(b) + " is not prime");
  }
}

std::uint64_t checked_power(PrimeBase base, int m) {
  if (m < 0) throw std::invalid_argument("negative exponent");
  std::uint64_t result = 1;
  for (int k = 0; k < m; ++k) {
    if (result > kMaxDenominator / base.value()) {
      throw OverflowError(std::to_string(base.value()) + "^" + std::to_string(m) +
                          " exceeds 2^63");
    }
    result *= base.value();
  }
  return result;
}

GenMatrix::GenMatrix(PrimeBase base, std::vector<std::vector<std::uint32_t>> rows)
    : base_(base), m_(static_cast<int>(rows.size())) {
  if (m_ == 0) throw std::invalid_argument("generating matrix must be non-empty");
  entries_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw std::invalid_argument("generating matrix must be square");
    for (std::uint32_t e : row) {
      if (e >= base.value()) throw std::invalid_argument("matrix entry outside [0, b)");
      entries_.push_back(e);
    }
  }
}

std::vector<std::uint32_t> GenMatrix::apply(const std::vector<std::uint32_t>& v) const {
  if (v.size() != static_cast<std::size_t>(m_)) {
    throw std::invalid_argument("digit vector length does not match matrix size");
  }
  const std::uint64_t b = base_.value();
  std::vector<std::uint32_t> out(v.size());
  for (int i = 0; i < m_; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < m_; ++j) {
      acc = (acc + static_cast<std::uint64_t>((*this)(i, j)) * v[static_cast<std::size_t>(j)]) % b;
    }
    out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

GenMatrix identity_matrix(PrimeBase base, int m) {
  if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
  std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(m),
                                               std::vector<std::uint32_t>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) rows[i][i] = 1;
  return GenMatrix(base, std::move(rows));
}

GenMatrix pascal_matrix(PrimeBase base, int m) {
  if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
  const std::uint32_t b = base.value();
  const auto n = static_cast<std::size_t>(m);
  // binom[j][i] = C(j, i) mod b
  std::vector<std::vector<std::uint32_t>> binom(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    binom[j][0] = 1 % b;
    for (std::size_t i = 1; i <= j; ++i) {
      binom[j][i] = (binom[j - 1][i - 1] + (i < j ? binom[j - 1][i] : 0)) % b;
    }
  }
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) rows[i][j] = binom[j][i];
  }
  return GenMatrix(base, std::move(rows));
}

DigitalNetSpec::DigitalNetSpec(PrimeBase base_, int m_, GenMatrix c1_, GenMatrix c2_)
    : base(base_), m(m_), c1(std::move(c1_)), c2(std::move(c2_)) {
  if (c1.base() != base || c2.base() != base) {
    throw std::invalid_argument("generating matrices use a different base");
  }
  if (c1.size() != m || c2.size() != m) {
    throw std::invalid_argument("generating matrices do not have size m");
  }
}

DigitalNetSpec DigitalNetSpec::identity_pascal(PrimeBase base, int m) {
  return DigitalNetSpec(base, m, identity_matrix(base, m), pascal_matrix(base, m));
}

UnitSquarePointSet::UnitSquarePointSet(PrimeBase base, int digits,
                                       std::vector<Numerators> numerators)
    : base_(base),
      digits_(digits),
      denominator_(checked_power(base, digits)),
      numerators_(std::move(numerators)) {
  if (numerators_.empty()) throw std::invalid_argument("point set must be non-empty");
  coords_.reserve(numerators_.size());
  const auto denom = static_cast<double>(denominator_);
  for (const auto& u : numerators_) {
    if (u[0] >= denominator_ || u[1] >= denominator_) {
      throw std::invalid_argument("numerator outside [0, b^digits)");
    }
    coords_.push_back({static_cast<double>(u[0]) / denom, static_cast<double>(u[1]) / denom});
  }
}

UnitSquarePointSet UnitSquarePointSet::slice(std::size_t first, std::size_t count) const {
  if (first > numerators_.size() || count > numerators_.size() - first) {
    throw std::out_of_range("slice exceeds point set");
  }
  const auto begin = numerators_.begin() + static_cast<std::ptrdiff_t>(first);
  return UnitSquarePointSet(base_, digits_,
                            std::vector<Numerators>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

std::vector<std::uint32_t> index_digits(std::uint64_t value, PrimeBase base, int count) {
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(count), 0);
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(value % base.value());
    value /= base.value();
  }
  if (value != 0) throw std::invalid_argument("value has more digits than requested");
  return digits;
}

std::vector<std::uint32_t> fraction_digits(std::uint64_t numerator, PrimeBase base, int depth) {
  auto digits = index_digits(numerator, base, depth);
  return {digits.rbegin(), digits.rend()};
}

std::uint64_t numerator_from_digits(const std::vector<std::uint32_t>& digits, PrimeBase base) {
  std::uint64_t u = 0;
  for (std::uint32_t d : digits) u = u * base.value() + d;
  return u;
}

UnitSquarePointSet digital_net(const DigitalNetSpec& spec) {
  const std::uint64_t count = checked_power(spec.base, spec.m);
  std::vector<UnitSquarePointSet::Numerators> nums;
  nums.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    const auto digits = index_digits(n, spec.base, spec.m);
    nums.push_back({numerator_from_digits(spec.c1.apply(digits), spec.base),
                    numerator_from_digits(spec.c2.apply(digits), spec.base)});
  }
  return UnitSquarePointSet(spec.base, spec.m, std::move(nums));
}

UnitSquarePointSet digital_sequence_prefix(PrimeBase base, std::uint64_t count, int depth) {
  if (count == 0) throw std::invalid_argument("count must be >= 1");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const std::uint64_t capacity = checked_power(base, depth);
  if (count > capacity) throw std::invalid_argument("depth too small for requested count");
  const auto spec = DigitalNetSpec::identity_pascal(base, depth);
  std::vector<UnitSquarePointSet::Numerators> nums;
  nums.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    const auto digits = index_digits(n, base, depth);
    nums.push_back({numerator_from_digits(spec.c1.apply(digits), base),
                    numerator_from_digits(spec.c2.apply(digits), base)});
  }
  return UnitSquarePointSet(base, depth, std::move(nums));
}

bool verify_net(const UnitSquarePointSet& points, int m) {
  if (m < 0 || m > points.digits()) {
    throw std::invalid_argument("net exponent exceeds point depth");
  }
  const PrimeBase base = points.base();
  const std::uint64_t cells = checked_power(base, m);
  if (points.size() != cells) {
    throw std::invalid_argument("verify_net: point count " + std::to_string(points.size()) +
                                " != b^m = " + std::to_string(cells));
  }
  std::vector<bool> occupied(cells);
  for (int d1 = 0; d1 <= m; ++d1) {
    const int d2 = m - d1;
    const std::uint64_t shift1 = checked_power(base, points.digits() - d1);
    const std::uint64_t shift2 = checked_power(base, points.digits() - d2);
    const std::uint64_t rows2 = checked_power(base, d2);
    std::fill(occupied.begin(), occupied.end(), false);
    for (const auto& u : points.numerators()) {
      const std::uint64_t cell = (u[0] / shift1) * rows2 + u[1] / shift2;
      if (occupied[cell]) return false;
      occupied[cell] = true;
    }
  }
  return true;
}

ScrambleState::ScrambleState(std::uint64_t seed_, GenMatrix l1_, GenMatrix l2_,
                             std::vector<std::uint32_t> shift1_,
                             std::vector<std::uint32_t> shift2_)
    : seed(seed_),
      l1(std::move(l1_)),
      l2(std::move(l2_)),
      shift1(std::move(shift1_)),
      shift2(std::move(shift2_)) {
  if (l1.base() != l2.base() || l1.size() != l2.size()) {
    throw std::invalid_argument("scrambling matrices disagree in base or size");
  }
  for (const GenMatrix* l : {&l1, &l2}) {
    for (int i = 0; i < l->size(); ++i) {
      if ((*l)(i, i) == 0) throw std::invalid_argument("scrambling matrix is singular");
      for (int j = i + 1; j < l->size(); ++j) {
        if ((*l)(i, j) != 0) throw std::invalid_argument("scrambling matrix is not lower triangular");
      }
    }
  }
  const auto m = static_cast<std::size_t>(l1.size());
  if (shift1.size() != m || shift2.size() != m) {
    throw std::invalid_argument("digital shift length does not match depth");
  }
  for (const auto* shift : {&shift1, &shift2}) {
    for (std::uint32_t d : *shift) {
      if (d >= l1.base().value()) throw std::invalid_argument("digital shift digit outside [0, b)");
    }
  }
}

ScrambleState ScrambleState::from_seed(PrimeBase base, int depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GenMatrix l1 = random_lower_triangular(base, depth, rng);
  GenMatrix l2 = random_lower_triangular(base, depth, rng);
  std::vector<std::uint32_t> s1(static_cast<std::size_t>(depth));
  std::vector<std::uint32_t> s2(static_cast<std::size_t>(depth));
  for (auto& d : s1) d = uniform_below(rng, base.value());
  for (auto& d : s2) d = uniform_below(rng, base.value());
  return ScrambleState(seed, std::move(l1), std::move(l2), std::move(s1), std::move(s2));
}

int scramble_depth(PrimeBase base) noexcept {
  constexpr std::uint64_t limit = std::uint64_t{1} << 53;
  int depth = 0;
  for (std::uint64_t p = base.value(); p <= limit; p *= base.value()) ++depth;
  return depth;
}

UnitSquarePointSet scramble(const UnitSquarePointSet& points, const ScrambleState& state) {
  const PrimeBase base = points.base();
  if (state.l1.base() != base || state.depth() < points.digits()) {
    throw std::invalid_argument("scramble state does not match point set base/depth");
  }
  const std::uint32_t b = base.value();
  const int depth = state.depth();
  const int in = points.digits();
  // Input digits beyond `in` are zero, so only the first `in` columns of
  // L contribute; the lower rows generate the trailing output digits.
  auto transform = [&](std::uint64_t u, const GenMatrix& l,
                       const std::vector<std::uint32_t>& shift) {
    const auto y = fraction_digits(u, base, in);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(depth));
    for (int i = 0; i < depth; ++i) {
      std::uint64_t s = shift[static_cast<std::size_t>(i)];
      for (int j = 0, end = std::min(i + 1, in); j < end; ++j) {
        s += static_cast<std::uint64_t>(l(i, j)) * y[static_cast<std::size_t>(j)];
      }
      out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(s % b);
    }
    return numerator_from_digits(out, base);
  };
  std::vector<UnitSquarePointSet::Numerators> nums;
  nums.reserve(points.size());
  for (const auto& u : points.numerators()) {
    nums.push_back({transform(u[0], state.l1, state.shift1),
                    transform(u[1], state.l2, state.shift2)});
  }
  return UnitSquarePointSet(base, depth, std::move(nums));
}

}  // namespace sphqmc
