#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rbsym/checked.hpp"

namespace rbsym {

/// Bitmask over positions 1..n-1; position i is bit i-1.
using PositionMask = std::uint32_t;

[[nodiscard]] constexpr PositionMask full_position_mask(int n) {
  return n <= 1 ? 0 : (PositionMask{1} << (n - 1)) - 1;
}

/// A subset I of [n-1] = {1, ..., n-1}, tagged with its degree n.
///
/// Doubles as the set of X-descent positions of a listing and as the key of
/// the M and F bases of QSym in degree n.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int n, PositionMask bits) : n_(n), bits_(bits) {
    if (n < 0) throw InvalidArgument("negative degree");
    if ((bits & ~full_position_mask(n)) != 0) {
      throw InvalidArgument("descent set contains a position outside [" + std::to_string(n - 1) + "]");
    }
  }
  DescentSet(int n, std::initializer_list<int> positions) : DescentSet(n, mask_of(n, positions)) {}

  static DescentSet from_positions(int n, const std::vector<int>& positions) {
    return {n, mask_of(n, positions)};
  }

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] PositionMask bits() const { return bits_; }
  [[nodiscard]] int size() const { return std::popcount(bits_); }
  [[nodiscard]] bool contains(int i) const { return i >= 1 && i < n_ && ((bits_ >> (i - 1)) & 1U) != 0; }

  [[nodiscard]] std::vector<int> positions() const {
    std::vector<int> out;
    for (PositionMask r = bits_; r != 0; r &= r - 1) out.push_back(std::countr_zero(r) + 1);
    return out;
  }

  /// I^op = {n - i : i in I}.
  [[nodiscard]] DescentSet opposite() const { return {n_, opposite_mask(n_, bits_)}; }
  /// I^c = [n-1] \ I.
  [[nodiscard]] DescentSet complement() const { return {n_, full_position_mask(n_) & ~bits_}; }

  [[nodiscard]] bool is_subset_of(const DescentSet& o) const { return (bits_ & ~o.bits_) == 0; }

  friend bool operator==(const DescentSet&, const DescentSet&) = default;
  friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

  [[nodiscard]] static PositionMask opposite_mask(int n, PositionMask bits) {
    PositionMask out = 0;
    for (PositionMask r = bits; r != 0; r &= r - 1) {
      const int i = std::countr_zero(r) + 1;
      out |= PositionMask{1} << (n - i - 1);
    }
    return out;
  }

 private:
  template <class Range>
  static PositionMask mask_of(int n, const Range& positions) {
    PositionMask m = 0;
    for (int i : positions) {
      if (i < 1 || i >= n) throw InvalidArgument("position " + std::to_string(i) + " outside [n-1]");
      m |= PositionMask{1} << (i - 1);
    }
    return m;
  }

  int n_ = 0;
  PositionMask bits_ = 0;
};

/// A composition (a_1, ..., a_k) of n: positive parts summing to n.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int a : parts_) {
      if (a < 1) throw InvalidArgument("composition parts must be positive");
      degree_ += a;
    }
  }
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const& { return parts_; }
  [[nodiscard]] std::vector<int> parts() && { return std::move(parts_); }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Partial sums {a_1, a_1 + a_2, ..., a_1 + ... + a_{k-1}}.
[[nodiscard]] inline DescentSet subset_of_comp(const Composition& alpha) {
  PositionMask m = 0;
  int sum = 0;
  const auto& parts = alpha.parts();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    sum += parts[i];
    m |= PositionMask{1} << (sum - 1);
  }
  return {alpha.degree(), m};
}

/// Inverse of subset_of_comp. Degree 0 maps to the empty composition.
[[nodiscard]] inline Composition comp_of_subset(const DescentSet& s) {
  if (s.degree() == 0) return {};
  std::vector<int> parts;
  int prev = 0;
  for (int i : s.positions()) {
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(s.degree() - prev);
  return Composition(std::move(parts));
}

}  // namespace rbsym
