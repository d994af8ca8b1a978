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
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sphqmc {

/// Raised when b^m does not fit the 64-bit numerator representation.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A prime base for digit arithmetic over Z_b.
class PrimeBase {
 public:
  /// Throws std::invalid_argument unless `b` is prime.
  explicit PrimeBase(std::uint32_t b);

  [[nodiscard]] std::uint32_t value() const noexcept { return b_; }
  friend bool operator==(PrimeBase, PrimeBase) = default;

 private:
  std::uint32_t b_;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Largest supported point count / denominator.
inline constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 63;

/// b^m, throwing OverflowError if it exceeds kMaxDenominator.
[[nodiscard]] std::uint64_t checked_power(PrimeBase base, int m);

/// Square m x m matrix over Z_b, row-major.
class GenMatrix {
 public:
  /// Throws std::invalid_argument on non-square input or entries outside [0, b).
  GenMatrix(PrimeBase base, std::vector<std::vector<std::uint32_t>> rows);

  [[nodiscard]] PrimeBase base() const noexcept { return base_; }
  [[nodiscard]] int size() const noexcept { return m_; }
  [[nodiscard]] std::uint32_t operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(m_) +
                    static_cast<std::size_t>(col)];
  }

  /// (this * v) mod b.
  [[nodiscard]] std::vector<std::uint32_t> apply(
      const std::vector<std::uint32_t>& v) const;

  friend bool operator==(const GenMatrix&, const GenMatrix&) = default;

 private:
  PrimeBase base_;
  int m_;
  std::vector<std::uint32_t> entries_;
};

[[nodiscard]] GenMatrix identity_matrix(PrimeBase base, int m);

/// Upper-triangular Pascal matrix: entry (i, j) = C(j, i) mod b.
[[nodiscard]] GenMatrix pascal_matrix(PrimeBase base, int m);

struct DigitalNetSpec {
  /// Throws std::invalid_argument if the matrices disagree with base or m.
  DigitalNetSpec(PrimeBase base, int m, GenMatrix c1, GenMatrix c2);

  /// The identity / Pascal pair, which generates a (0,m,2)-net.
  static DigitalNetSpec identity_pascal(PrimeBase base, int m);

  PrimeBase base;
  int m;
  GenMatrix c1;
  GenMatrix c2;
};

/// Points in [0,1)^2 kept as exact numerators over b^digits.
///
/// The floating coordinates are always numerator / b^digits; nothing
/// else is allowed to produce them.
class UnitSquarePointSet {
 public:
  using Numerators = std::array<std::uint64_t, 2>;
  using Coords = std::array<double, 2>;

  /// Throws std::invalid_argument if empty or a numerator is >= b^digits,
  /// OverflowError if b^digits is too large.
  UnitSquarePointSet(PrimeBase base, int digits, std::vector<Numerators> numerators);

  [[nodiscard]] PrimeBase base() const noexcept { return base_; }
  [[nodiscard]] int digits() const noexcept { return digits_; }
  [[nodiscard]] std::uint64_t denominator() const noexcept { return denominator_; }
  [[nodiscard]] std::size_t size() const noexcept { return numerators_.size(); }
  [[nodiscard]] const std::vector<Numerators>& numerators() const noexcept {
    return numerators_;
  }
  [[nodiscard]] const std::vector<Coords>& coords() const noexcept { return coords_; }

  /// Points [first, first + count) as a new set with the same denominator.
  [[nodiscard]] UnitSquarePointSet slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const UnitSquarePointSet& a, const UnitSquarePointSet& b) {
    return a.base_ == b.base_ && a.digits_ == b.digits_ && a.numerators_ == b.numerators_;
  }

 private:
  PrimeBase base_;
  int digits_;
  std::uint64_t denominator_;
  std::vector<Numerators> numerators_;
  std::vector<Coords> coords_;
};

/// Base-b digits of `value`, least significant first, padded to `count`.
[[nodiscard]] std::vector<std::uint32_t> index_digits(std::uint64_t value,
                                                      PrimeBase base, int count);

/// Digits of a numerator over b^depth, most significant (1/b) first.
[[nodiscard]] std::vector<std::uint32_t> fraction_digits(std::uint64_t numerator,
                                                         PrimeBase base, int depth);

/// Inverse of fraction_digits.
[[nodiscard]] std::uint64_t numerator_from_digits(const std::vector<std::uint32_t>& digits,
                                                  PrimeBase base);

/// All b^m points of the digital net, in index order.
[[nodiscard]] UnitSquarePointSet digital_net(const DigitalNetSpec& spec);

/// First `count` points of the identity/Pascal digital (0,2)-sequence,
/// truncated to `depth` digits.
[[nodiscard]] UnitSquarePointSet digital_sequence_prefix(PrimeBase base,
                                                         std::uint64_t count,
                                                         int depth);

/// True iff every elementary interval of volume b^-m holds exactly one
/// point. Uses integer arithmetic only. Throws std::invalid_argument
/// if |points| != b^m or m exceeds the point depth.
[[nodiscard]] bool verify_net(const UnitSquarePointSet& points, int m);

/// Algorithm used to draw scrambling matrices; recorded in output metadata.
inline constexpr std::string_view kScrambleRngName = "mt19937_64";

/// Random linear scrambling (nonsingular lower-triangular L) plus a digital
/// shift, one per coordinate, at a fixed digit depth. A depth beyond the
/// net's own digits fills the trailing digits at random, so no point sits
/// on the square's boundary except with probability b^-(depth - m).
struct ScrambleState {
  /// Throws std::invalid_argument unless l1/l2 are lower triangular with a
  /// nonzero diagonal and the shifts match the matrix size.
  ScrambleState(std::uint64_t seed, GenMatrix l1, GenMatrix l2,
                std::vector<std::uint32_t> shift1, std::vector<std::uint32_t> shift2);

  /// Deterministic draw from `seed`.
  static ScrambleState from_seed(PrimeBase base, int depth, std::uint64_t seed);

  [[nodiscard]] int depth() const noexcept { return l1.size(); }

  std::uint64_t seed;
  GenMatrix l1;
  GenMatrix l2;
  std::vector<std::uint32_t> shift1;
  std::vector<std::uint32_t> shift2;
};

/// Largest depth D with b^D <= 2^53, so scrambled coordinates are exact doubles.
[[nodiscard]] int scramble_depth(PrimeBase base) noexcept;

/// Coordinate-i digits y, zero-padded to the state's depth, become
/// (L_i y + shift_i) mod b. The result has state.depth() digits; throws
/// std::invalid_argument if that is fewer than the input's.
[[nodiscard]] UnitSquarePointSet scramble(const UnitSquarePointSet& points,
                                          const ScrambleState& state);

}  // namespace sphqmc
