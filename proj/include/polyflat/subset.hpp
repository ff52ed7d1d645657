// Copyright 2026 The polyflat Authors
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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace polyflat {

/// A subset of a ground set, element i <-> bit i.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset singleton(std::size_t i) { return Subset(Bits{1} << i); }
  /// {0, ..., n-1}
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr std::size_t index() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(Subset other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool disjoint(Subset other) const { return (bits_ & other.bits_) == 0; }

  constexpr Subset with(std::size_t i) const { return Subset(bits_ | (Bits{1} << i)); }
  constexpr Subset without(std::size_t i) const {
    return Subset(bits_ & ~(Bits{1} << i));
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  /// Calls fn(i) for every member, in increasing index order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
      fn(static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }

 private:
  Bits bits_ = 0;
};

/// Number of subsets of an n-element ground set.
constexpr std::size_t subset_count(std::size_t n) { return std::size_t{1} << n; }

/// Calls fn(Subset) for all 2^n subsets in increasing bit order.
template <typename Fn>
void for_each_subset(std::size_t n, Fn&& fn) {
  const std::size_t count = subset_count(n);
  for (std::size_t m = 0; m < count; ++m) fn(Subset(static_cast<Subset::Bits>(m)));
}

/// Calls fn(Subset) for every subset of `of`, including the empty set and `of`.
template <typename Fn>
void for_each_subset_of(Subset of, Fn&& fn) {
  Subset::Bits sub = of.bits();
  while (true) {
    fn(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & of.bits();
  }
}

}  // namespace polyflat

template <>
struct std::hash<polyflat::Subset> {
  std::size_t operator()(polyflat::Subset s) const noexcept {
    return std::hash<polyflat::Subset::Bits>{}(s.bits());
  }
};
